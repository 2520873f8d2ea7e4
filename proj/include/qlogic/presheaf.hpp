#pragma once

// Presheaves over a finite, explicitly declared subcategory of Boolean
// algebras, and the functor of Boolean frames R(L) = Hom(M(-), L).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/boolean.hpp"
#include "qlogic/hom.hpp"

namespace qlogic {

struct BaseArrow {
  int source = 0;
  int target = 0;
  BooleanHom hom;
};

class BaseCategory {
 public:
  // Every Boolean hom between the listed objects.
  static BaseCategory full(const std::vector<int>& atom_counts, int max_atoms = configured_max_atoms());

  // Identities plus the closure of `generators` under composition. Each
  // generator must run between listed objects.
  static BaseCategory generated(const std::vector<int>& atom_counts, const std::vector<BooleanHom>& generators,
                                int max_atoms = configured_max_atoms());

  std::size_t object_count() const { return objects_.size(); }
  const BooleanAlgebra& object(int i) const { return objects_[i]; }
  std::optional<int> find_object(int atoms) const;

  std::size_t arrow_count() const { return arrows_.size(); }
  const BaseArrow& arrow(int a) const { return arrows_[a]; }
  std::optional<int> find_arrow(const BooleanHom& h) const;
  std::vector<int> arrows_between(int source, int target) const;
  int identity(int object) const { return identities_[object]; }

  // g ∘ f when f.target == g.source.
  std::optional<int> compose(int g, int f) const;

  std::string arrow_name(int a) const;

 private:
  BaseCategory() = default;
  void finish();

  std::vector<BooleanAlgebra> objects_;
  std::vector<BaseArrow> arrows_;
  std::vector<int> identities_;
  std::vector<int> compose_;
};

using BasePtr = std::shared_ptr<const BaseCategory>;

// Full subcategory on 2^1 .. 2^max_atoms.
BasePtr full_base(int max_atoms);

// Objects 2^1 .. 2^max_atoms; arrows are the identities and the injective
// homs into strictly larger algebras.
BasePtr injective_base(int max_atoms);

class Presheaf {
 public:
  // restrictions[a] maps P(target(a)) to P(source(a)).
  Presheaf(BasePtr base, std::vector<std::vector<std::string>> labels, std::vector<std::vector<int>> restrictions);

  const BaseCategory& base() const { return *base_; }
  const BasePtr& base_ptr() const { return base_; }
  std::size_t size(int object) const { return labels_[object].size(); }
  const std::string& label(int object, int p) const { return labels_[object][p]; }
  int restrict(int arrow, int p) const { return restrictions_[arrow][p]; }
  const std::vector<int>& restriction(int arrow) const { return restrictions_[arrow]; }

  // Description of the first identity or composition law that fails.
  std::optional<std::string> functoriality_violation() const;

 private:
  BasePtr base_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<int>> restrictions_;
};

// y[B] = Hom(-, B); its elements at C are base arrow indices C -> B.
struct Representable {
  Presheaf presheaf;
  std::vector<std::vector<int>> arrows;  // per object: element index -> arrow index
};
Representable yoneda_presheaf(const BasePtr& base, int object);

Presheaf constant_presheaf(const BasePtr& base, std::size_t size);

struct ElementObject {
  int object;
  int element;
};

struct ElementArrow {
  int arrow;   // the base arrow u
  int source;  // index of (B', p · u)
  int target;  // index of (B, p)
};

struct ElementsCategory {
  std::vector<ElementObject> objects;
  std::vector<ElementArrow> arrows;
  std::vector<int> offsets;  // first object index per base object

  int index_of(int object, int element) const { return offsets[object] + element; }
};

ElementsCategory category_of_elements(const Presheaf& p);

struct FramesFunctor {
  QuantumEventAlgebra algebra;
  std::vector<std::vector<QuantumHom>> homs;  // per base object, sorted
  Presheaf presheaf;

  std::optional<int> find(int object, const QuantumHom& h) const;
};

FramesFunctor frames_functor(const QuantumEventAlgebra& l, const BasePtr& base, const HomSearchLimits& limits = {});

// One component map per base object.
using NaturalTransformation = std::vector<std::vector<int>>;

bool is_natural(const Presheaf& p, const Presheaf& q, const NaturalTransformation& phi);

// All natural transformations P -> Q in lexicographic order of components.
std::vector<NaturalTransformation> enumerate_natural_transformations(const Presheaf& p, const Presheaf& q,
                                                                     std::size_t limit = 1'000'000);

}  // namespace qlogic
