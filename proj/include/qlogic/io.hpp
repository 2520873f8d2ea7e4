#pragma once

// Lattice file formats and the built-in fixtures.
//
// JSON:
//   {"label": "MO2", "elements": ["0", "a", ...], "top": "1",
//    "ortho": {"0": "1", "a": "a*", ...}, "covers": [["0", "a"], ...]}
// "leq" may replace "covers" and holds any generating pairs. Other keys are
// rejected.
//
// Greechie text, one directive per line or separated by ';':
//   label <name>
//   block <atom> <atom> ...
// Blocks are pasted along shared atoms. An element is a set of atoms of
// one block; two such sets name the same element when they are equal or
// their complements in their blocks are equal.

#include <string>
#include <vector>

#include "qlogic/oml.hpp"

namespace qlogic {

// Structure only; throws ParseError on syntax and ValidationError when the
// data do not describe an orthoposet.
QuantumEventAlgebra read_lattice_json(const std::string& text);
std::string write_lattice_json(const QuantumEventAlgebra& l);

QuantumEventAlgebra read_greechie(const std::string& text);
// Blocks in enumerate_blocks order with their atoms ascending.
std::string write_greechie(const QuantumEventAlgebra& l);

// Throws ValidationError naming the failed conditions when check_axioms
// fails.
void require_valid(const QuantumEventAlgebra& l);

// JSON when the first non-blank character is '{', Greechie otherwise.
QuantumEventAlgebra read_lattice(const std::string& text);

// read_lattice followed by require_valid.
QuantumEventAlgebra parse_lattice(const std::string& text);

// Reads a file; ParseError when it cannot be opened.
std::string read_file(const std::string& path);

// The text behind a lattice argument: "2", "2^n", "mo2", "mo3", "greechie"
// (two 8-element blocks sharing an atom), or else the contents of a file.
std::string lattice_source(const std::string& name_or_path);

// parse_lattice(lattice_source(name_or_path)).
QuantumEventAlgebra load_lattice(const std::string& name_or_path);
bool is_builtin_lattice(const std::string& name);
std::vector<std::string> builtin_lattice_names();

}  // namespace qlogic
