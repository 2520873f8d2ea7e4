#pragma once

// Finite quantum event algebras (orthomodular orthoposets).
//
// Elements are dense indices 0..size()-1. The order is stored as its
// reflexive-transitive closure, and joins/meets are tabulated once at
// construction, so every query below is O(1).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/error.hpp"

namespace qlogic {

using Element = int;

class QuantumEventAlgebra {
 public:
  // `leq` may be a cover relation or any generating relation; the closure is
  // taken. Throws MalformedInput when ortho is not a bijection on the
  // elements or the closed relation is not antisymmetric.
  static QuantumEventAlgebra from_relation(std::string label, std::vector<std::string> names,
                                           const std::vector<std::pair<Element, Element>>& leq,
                                           std::vector<Element> ortho, Element top);

  const std::string& label() const { return label_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& name) const;

  Element top() const { return top_; }
  Element bottom() const { return ortho_[top_]; }
  Element ortho(Element x) const { return ortho_[x]; }
  bool leq(Element x, Element y) const { return order_[x * size() + y] != 0; }
  bool orthogonal(Element x, Element y) const { return leq(x, ortho(y)); }

  std::optional<Element> join(Element x, Element y) const;
  std::optional<Element> meet(Element x, Element y) const;

  // Hasse diagram of the order, in lexicographic order.
  std::vector<std::pair<Element, Element>> covers() const;

  // Minimal elements strictly above bottom.
  std::vector<Element> atoms() const;

  QuantumEventAlgebra relabeled(std::string label) const;

 private:
  QuantumEventAlgebra() = default;

  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> order_;
  std::vector<Element> ortho_;
  std::vector<Element> joins_;
  std::vector<Element> meets_;
  Element top_ = 0;
};

struct AxiomCheck {
  char condition;  // 'a' .. 'f'
  bool passed = true;
  std::optional<std::pair<Element, Element>> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool passed() const;
  const AxiomCheck& condition(char c) const;
  std::vector<char> failed() const;
};

AxiomReport check_axioms(const QuantumEventAlgebra& algebra);

struct GeneratedSubalgebra {
  std::vector<Element> carrier;  // sorted
  bool is_boolean = false;
};

// Smallest set containing the seeds, 0 and 1 that is closed under ortho and
// under joins of its orthogonal pairs. Throws ClosureFailure when one of
// those joins does not exist.
GeneratedSubalgebra generated_boolean(const QuantumEventAlgebra& algebra,
                                      const std::vector<Element>& seeds);

// True iff every pair of the carrier has its join and meet in the carrier,
// those operations distribute, and ortho complements within the carrier.
bool is_boolean_subalgebra(const QuantumEventAlgebra& algebra, const std::vector<Element>& carrier);

bool compatible(const QuantumEventAlgebra& algebra, Element x, Element y);

// Maximal Boolean subalgebras, each sorted, in lexicographic order.
std::vector<std::vector<Element>> enumerate_blocks(const QuantumEventAlgebra& algebra);

// The atoms of a Boolean carrier (minimal nonzero members).
std::vector<Element> block_atoms(const QuantumEventAlgebra& algebra,
                                 const std::vector<Element>& carrier);

// Lattice-ordered inputs only: x <= y implies y = x v (y ^ x*).
bool satisfies_orthomodular_law(const QuantumEventAlgebra& algebra);

}  // namespace qlogic
