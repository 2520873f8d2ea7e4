#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "qlogic/boolean.hpp"
#include "qlogic/oml.hpp"

namespace qlogic {

// A map between quantum event algebras, indexed by source element.
struct QuantumHom {
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
  bool injective() const;

  friend auto operator<=>(const QuantumHom&, const QuantumHom&) = default;
};

QuantumHom compose(const QuantumHom& g, const QuantumHom& f);
QuantumHom identity_hom(const QuantumEventAlgebra& l);

// Preserves 1, ortho, order and the joins of orthogonal pairs.
bool is_quantum_hom(const QuantumEventAlgebra& source, const QuantumEventAlgebra& target, const QuantumHom& h);

// Only the bottom element is sent to the bottom.
bool kernel_trivial(const QuantumEventAlgebra& source, const QuantumEventAlgebra& target, const QuantumHom& h);

struct HomSearchLimits {
  std::size_t max_source = 64;
  std::size_t max_nodes = 50'000'000;
};

// Every quantum hom source -> target, sorted lexicographically by map.
// Backtracks over element images; each assignment forces the ortho image and
// the images of orthogonal joins with already-assigned elements.
std::vector<QuantumHom> enumerate_quantum_homs(const QuantumEventAlgebra& source, const QuantumEventAlgebra& target,
                                               const HomSearchLimits& limits = {});

// M on arrows.
QuantumHom modeling_arrow(const BooleanHom& f);

// A bijective quantum hom whose inverse is also order preserving.
std::optional<QuantumHom> find_isomorphism(const QuantumEventAlgebra& a, const QuantumEventAlgebra& b);

}  // namespace qlogic
