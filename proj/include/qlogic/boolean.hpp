#pragma once

// Finite Boolean event algebras in their Stone representation: the element
// with index m is the set of atoms whose bits are set in m.

#include <cstdint>
#include <string>
#include <vector>

#include "qlogic/oml.hpp"

namespace qlogic {

inline constexpr int kDefaultMaxAtoms = 5;

// Reads QLOGIC_MAX_ATOMS, falling back to kDefaultMaxAtoms.
int configured_max_atoms();

struct BooleanAlgebra {
  int atoms = 1;

  std::size_t size() const { return std::size_t{1} << atoms; }
  Element top() const { return static_cast<Element>(size() - 1); }
  Element complement(Element x) const { return top() ^ x; }
  std::string label() const;
  std::string element_name(Element x) const;

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;
};

// Throws SizeBound when n exceeds max_atoms, MalformedInput when n < 1.
BooleanAlgebra boolean_from_atoms(int n, int max_atoms = configured_max_atoms());

struct BooleanHom {
  BooleanAlgebra source;
  BooleanAlgebra target;
  std::vector<Element> map;  // indexed by source element

  Element operator()(Element x) const { return map[x]; }
  bool injective() const;

  friend bool operator==(const BooleanHom&, const BooleanHom&) = default;
};

BooleanHom identity_hom(const BooleanAlgebra& b);

// g ∘ f; requires f.target == g.source.
BooleanHom compose(const BooleanHom& g, const BooleanHom& f);

// The hom determined by the images of the source atoms. The images must be
// pairwise disjoint with union equal to the target's top.
BooleanHom hom_from_atom_images(const BooleanAlgebra& source, const BooleanAlgebra& target,
                                const std::vector<Element>& atom_images);

// Exhaustive check of 0, 1, complement, binary join and meet.
bool preserves_boolean_structure(const BooleanHom& f);

// All homs C -> B, ordered lexicographically by their atom-image vectors.
std::vector<BooleanHom> enumerate_boolean_homs(const BooleanAlgebra& c, const BooleanAlgebra& b);

// M(B): the Boolean algebra seen as a quantum event algebra.
QuantumEventAlgebra modeling_object(const BooleanAlgebra& b);

}  // namespace qlogic
