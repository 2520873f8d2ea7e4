#pragma once

// The left adjoint L(P): the colimit of M over the category of elements of
// P, computed as the coequalizer of
//
//   coprod_{u : B' -> B, p in P(B)} M(B')  ==>  coprod_{(B, p)} M(B)
//
// with zeta(p, u, q') = (p . u, q') and eta(p, u, q') = (p, u(q')). The
// result is the set of tensor classes p ⊗ q carrying the induced ortho,
// unit and order.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/presheaf.hpp"

namespace qlogic {

struct PointedElement {
  int object;
  int element;
  Element point;
};

// Y(P): every (B, p, q) with p in P(B) and q in M(B).
class PointedSet {
 public:
  explicit PointedSet(const Presheaf& p);

  std::size_t size() const { return points_.size(); }
  const PointedElement& operator[](std::size_t i) const { return points_[i]; }
  int index_of(int object, int element, Element point) const;
  const std::vector<PointedElement>& points() const { return points_; }

 private:
  std::vector<PointedElement> points_;
  std::vector<int> offsets_;
  std::vector<std::size_t> widths_;
  std::vector<int> element_offsets_;
};

// The coequalizer's generating pairs (zeta(x), eta(x)) as point indices.
std::vector<std::pair<int, int>> generator_pairs(const Presheaf& p, const PointedSet& points);

struct Partition {
  std::vector<int> class_of;              // per point
  std::vector<std::vector<int>> members;  // per class, ascending

  std::size_t class_count() const { return members.size(); }
};

// Smallest equivalence containing the generating pairs.
Partition generate_equivalence(const Presheaf& p);

// Same, for R(L) or a subfunctor given by hom lists: first verifies every
// declared arrow's frame equation psi_{B'} = psi_B ∘ M(u). Throws
// InconsistentInput when one fails.
Partition generate_equivalence(const Presheaf& p, const std::vector<std::vector<QuantumHom>>& frames);

struct QuotientAlgebra {
  PointedSet points;
  Partition partition;
  QuantumEventAlgebra algebra;  // element i is class i
  bool empty_diagram = false;   // no points: the initial algebra 2
  bool collapsed = false;       // 0 and 1 were identified

  int class_of(int object, int element, Element point) const;
  std::string tensor_name(int point_index, const Presheaf& p) const;
};

// Induced structure on a partition of Y(P). Every 0-point and every
// 1-point is identified (any cocone into a quantum event algebra forces
// this), and if that merges 0 with 1 the quotient collapses to the one-point
// algebra. Ortho is [p ⊗ q]* = p ⊗ q*, the unit is p ⊗ 1, and the order is
// generated by p ⊗ q1 <= p ⊗ q2 for q1 <= q2 in a common frame. Throws
// NotAPartialOrder when that order fails antisymmetry.
QuotientAlgebra quotient_structure(const Presheaf& p, const Partition& partition);

QuotientAlgebra left_adjoint(const Presheaf& p);

// The hom out of the quotient induced by a cocone given per frame (B, p) as a
// quantum hom M(B) -> L. nullopt when the cocone does not respect the classes.
std::optional<QuantumHom> induced_hom(const QuotientAlgebra& q, const QuantumEventAlgebra& target,
                                      const std::vector<std::vector<QuantumHom>>& cocone);

// chi_{B,p} : M(B) -> L(P), q |-> p ⊗ q.
QuantumHom coprojection(const QuotientAlgebra& q, int object, int element);

struct AdjunctionReport {
  std::size_t nat_count = 0;
  std::size_t hom_count = 0;
  bool well_defined = true;   // every phi induces a class-respecting quantum hom
  bool injective = true;
  bool surjective = true;
  bool inverse_agrees = true;  // h |-> (h ∘ chi) is a two-sided inverse
  std::vector<std::string> failures;

  bool bijection() const { return well_defined && injective && surjective && inverse_agrees; }
};

// Nat(P, R(L)) ≅ Hom(L(P), L) via phi |-> (p ⊗ q |-> phi_B(p)(q)).
AdjunctionReport adjunction_bijection_check(const Presheaf& p, const QuantumEventAlgebra& l,
                                            const HomSearchLimits& limits = {});

// Naturality of that bijection in L: for every g : L1 -> L2,
// Phi(R(g) ∘ phi) == g ∘ Phi(phi).
bool adjunction_natural_in_target(const Presheaf& p, const QuantumEventAlgebra& l1, const QuantumEventAlgebra& l2,
                                  const HomSearchLimits& limits = {});

}  // namespace qlogic
