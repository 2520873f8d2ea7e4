#pragma once

// Subobjects of modeled Boolean algebras, the subobject presheaf, and the
// truth-values algebra Omega = L(Upsilon) in tensor form.

#include <optional>
#include <string>
#include <vector>

#include "qlogic/localization.hpp"

namespace qlogic {

// A subobject of M(B), canonicalized by its image: a subset containing 0 and
// 1 that is closed under complement and under disjoint unions. The monic is
// the inclusion of that subset with the induced structure.
struct Subobject {
  BooleanAlgebra object;
  std::vector<Element> image;  // sorted

  bool contains(Element x) const;
  bool is_identity() const { return image.size() == object.size(); }
  std::string label() const;
  QuantumEventAlgebra domain() const;
  QuantumHom monic() const;

  friend bool operator==(const Subobject&, const Subobject&) = default;
};

bool is_subobject_image(const BooleanAlgebra& b, const std::vector<Element>& image);

// All subobjects of M(B), by image size then lexicographically. The
// identity comes last and is the maximum under inclusion.
std::vector<Subobject> subobjects_of(const BooleanAlgebra& b);

// lambda ∗ v for v : C -> B, the preimage of the image.
Subobject pullback(const Subobject& lambda, const BooleanHom& v);

struct SubobjectFunctor {
  std::vector<std::vector<Subobject>> sets;  // per base object
  Presheaf presheaf;

  std::optional<int> find(int object, const std::vector<Element>& image) const;
};

SubobjectFunctor subobject_functor(const BasePtr& base);

struct OmegaAlgebra {
  SubobjectFunctor upsilon;
  QuotientAlgebra quotient;
  Element true_class = 0;
  Element false_class = 0;

  const QuantumEventAlgebra& algebra() const { return quotient.algebra; }
  const BaseCategory& base() const { return upsilon.presheaf.base(); }
  Element class_of(int object, int subobject, Element b) const { return quotient.class_of(object, subobject, b); }
};

// Omega over the given base. Bases with non-injective arrows identify
// id ⊗ b with both 0 and 1, and then Omega collapses to a single class;
// injective_base(3) already fails antisymmetry. The default is the largest
// base tested that gives a nondegenerate algebra.
OmegaAlgebra build_omega(const BasePtr& base = injective_base(2));

struct TruthValue {
  Element omega_class = 0;
  bool in_image = false;      // b lies in the image of lambda
  bool is_true = false;       // the class is true
  bool classified = false;    // the class is true or false
  bool criterion_holds = false;
};

// The class of lambda ⊗ b. The criterion compares the class with membership:
// lambda ⊗ b is true iff b is a nonzero member of the image (lambda ⊗ 0 is
// the bottom class, false). `classified` is the reading through the pullback
// of 1 -> Omega, with 1 the two-element algebra on (false, true).
TruthValue truth_value(const OmegaAlgebra& omega, int object, int subobject, Element b);

struct CharacteristicMember {
  CoverRef cover;
  int omega_object = 0;
  int subobject = 0;         // index into omega.upsilon.sets[omega_object]
  std::vector<Element> chi;  // b |-> class of lambda ⊗ b
};

struct Classification {
  std::vector<CharacteristicMember> family;
  bool overlap_compatible = true;
  std::vector<Element> recovered;  // elements of L classified into the subobject
  bool reconstructs = false;
};

// Characteristic family of an injective l : K -> L over the covers of a
// Boolean localization. Throws NotLocalized when the counit verdict fails.
Classification classify_subobject(const QuantumEventAlgebra& k, const QuantumHom& l, const CoveringIdeal& ideal,
                                  const OmegaAlgebra& omega);

struct MeasurementReport {
  Element id_c = 0;      // id_{M(C)} ⊗ c
  Element lambda_b = 0;  // lambda ⊗ b
  Element id_b = 0;      // id_{M(B)} ⊗ b
  Element true_class = 0;
  bool restriction_is_identity = false;  // lambda ∗ v = id_{M(C)}
  bool chain_holds = false;
  bool value = false;
};

// lambda is the image of the injective v : C -> B, which must be an arrow of
// Omega's base. Throws ScenarioMismatch when v(c) != b.
MeasurementReport measurement_scenario(const OmegaAlgebra& omega, const BooleanHom& v, Element c, Element b);

struct SlitCounter {
  BooleanHom v;  // apparatus context C -> apparatus-and-system context B
  Element c = 0;
  Element b = 0;  // v(c)
  std::vector<std::string> apparatus_atoms;
  std::vector<std::string> coupled_atoms;
};

// C = 2, the counter alone, with c its unit. B = 2^2 with atoms
// {click&pass, silent}; the preparation excludes click&blocked, so
// b = (click => pass) is the unit of B.
SlitCounter slit_counter();

}  // namespace qlogic
