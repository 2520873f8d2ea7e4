#include "qlogic/presheaf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace qlogic {

namespace {

std::vector<Element> atom_images(const BooleanHom& h) {
  std::vector<Element> k;
  for (int i = 0; i < h.source.atoms; ++i) k.push_back(h.map[Element{1} << i]);
  return k;
}

using ArrowKey = std::tuple<int, int, std::vector<Element>>;

}  // namespace

BaseCategory BaseCategory::full(const std::vector<int>& atom_counts, int max_atoms) {
  BaseCategory c;
  std::set<int> sorted(atom_counts.begin(), atom_counts.end());
  for (int n : sorted) c.objects_.push_back(boolean_from_atoms(n, max_atoms));
  for (int s = 0; s < static_cast<int>(c.objects_.size()); ++s)
    for (int t = 0; t < static_cast<int>(c.objects_.size()); ++t)
      for (auto& h : enumerate_boolean_homs(c.objects_[s], c.objects_[t])) c.arrows_.push_back({s, t, std::move(h)});
  c.finish();
  return c;
}

BaseCategory BaseCategory::generated(const std::vector<int>& atom_counts, const std::vector<BooleanHom>& generators,
                                     int max_atoms) {
  BaseCategory c;
  std::set<int> sorted(atom_counts.begin(), atom_counts.end());
  for (int n : sorted) c.objects_.push_back(boolean_from_atoms(n, max_atoms));
  auto object_of = [&](const BooleanAlgebra& b) {
    auto it = std::find(c.objects_.begin(), c.objects_.end(), b);
    if (it == c.objects_.end())
      throw Error(ErrorKind::InconsistentInput, "generator touches undeclared object " + b.label());
    return static_cast<int>(it - c.objects_.begin());
  };

  std::map<ArrowKey, int> seen;
  auto add = [&](const BooleanHom& h) {
    if (!preserves_boolean_structure(h)) throw Error(ErrorKind::InconsistentInput, "generator is not a Boolean hom");
    ArrowKey key{object_of(h.source), object_of(h.target), h.map};
    if (seen.count(key)) return;
    seen.emplace(key, static_cast<int>(c.arrows_.size()));
    c.arrows_.push_back({std::get<0>(key), std::get<1>(key), h});
  };
  for (const auto& b : c.objects_) add(identity_hom(b));
  for (const auto& g : generators) add(g);
  for (std::size_t done = 0;;) {
    const std::size_t n = c.arrows_.size();
    if (done == n) break;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i < done && k < done) continue;
        if (c.arrows_[k].target != c.arrows_[i].source) continue;
        add(qlogic::compose(c.arrows_[i].hom, c.arrows_[k].hom));
      }
    done = n;
  }
  c.finish();
  return c;
}

void BaseCategory::finish() {
  std::sort(arrows_.begin(), arrows_.end(), [](const BaseArrow& a, const BaseArrow& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target) ||
           (std::tie(a.source, a.target) == std::tie(b.source, b.target) && atom_images(a.hom) < atom_images(b.hom));
  });
  std::map<ArrowKey, int> index;
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    index.emplace(ArrowKey{arrows_[a].source, arrows_[a].target, arrows_[a].hom.map}, a);
  identities_.assign(objects_.size(), -1);
  for (int o = 0; o < static_cast<int>(objects_.size()); ++o)
    identities_[o] = index.at(ArrowKey{o, o, identity_hom(objects_[o]).map});
  const auto n = arrows_.size();
  compose_.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (arrows_[f].target != arrows_[g].source) continue;
      auto h = qlogic::compose(arrows_[g].hom, arrows_[f].hom);
      auto it = index.find(ArrowKey{arrows_[f].source, arrows_[g].target, h.map});
      if (it == index.end()) throw Error(ErrorKind::InconsistentInput, "declared arrows are not closed under composition");
      compose_[g * n + f] = it->second;
    }
}

std::optional<int> BaseCategory::find_object(int atoms) const {
  for (int o = 0; o < static_cast<int>(objects_.size()); ++o)
    if (objects_[o].atoms == atoms) return o;
  return std::nullopt;
}

std::optional<int> BaseCategory::find_arrow(const BooleanHom& h) const {
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    if (arrows_[a].hom == h) return a;
  return std::nullopt;
}

std::vector<int> BaseCategory::arrows_between(int source, int target) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    if (arrows_[a].source == source && arrows_[a].target == target) out.push_back(a);
  return out;
}

std::optional<int> BaseCategory::compose(int g, int f) const {
  int h = compose_[g * arrows_.size() + f];
  if (h < 0) return std::nullopt;
  return h;
}

std::string BaseCategory::arrow_name(int a) const {
  const auto& arr = arrows_[a];
  std::string out = arr.hom.source.label() + "->" + arr.hom.target.label() + "<";
  auto images = atom_images(arr.hom);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ",";
    out += arr.hom.target.element_name(images[i]);
  }
  return out + ">";
}

BasePtr full_base(int max_atoms) {
  std::vector<int> counts;
  for (int k = 1; k <= max_atoms; ++k) counts.push_back(k);
  return std::make_shared<const BaseCategory>(BaseCategory::full(counts, std::max(max_atoms, configured_max_atoms())));
}

BasePtr injective_base(int max_atoms) {
  std::vector<int> counts;
  std::vector<BooleanHom> generators;
  const int bound = std::max(max_atoms, configured_max_atoms());
  for (int k = 1; k <= max_atoms; ++k) {
    counts.push_back(k);
    const auto source = boolean_from_atoms(k, bound);
    for (int m = k + 1; m <= max_atoms; ++m)
      for (auto& h : enumerate_boolean_homs(source, boolean_from_atoms(m, bound)))
        if (h.injective()) generators.push_back(std::move(h));
  }
  return std::make_shared<const BaseCategory>(BaseCategory::generated(counts, generators, bound));
}

Presheaf::Presheaf(BasePtr base, std::vector<std::vector<std::string>> labels,
                   std::vector<std::vector<int>> restrictions)
    : base_(std::move(base)), labels_(std::move(labels)), restrictions_(std::move(restrictions)) {
  if (labels_.size() != base_->object_count())
    throw Error(ErrorKind::InconsistentInput, "presheaf needs one set per declared object");
  if (restrictions_.size() != base_->arrow_count())
    throw Error(ErrorKind::InconsistentInput, "presheaf needs one restriction per declared arrow");
  for (int a = 0; a < static_cast<int>(restrictions_.size()); ++a) {
    const auto& arr = base_->arrow(a);
    if (restrictions_[a].size() != labels_[arr.target].size())
      throw Error(ErrorKind::InconsistentInput, "restriction along " + base_->arrow_name(a) + " has the wrong domain");
    for (int v : restrictions_[a])
      if (v < 0 || static_cast<std::size_t>(v) >= labels_[arr.source].size())
        throw Error(ErrorKind::InconsistentInput, "restriction along " + base_->arrow_name(a) + " leaves its codomain");
  }
}

std::optional<std::string> Presheaf::functoriality_violation() const {
  const auto& c = *base_;
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) {
    const int id = c.identity(o);
    for (int p = 0; p < static_cast<int>(size(o)); ++p)
      if (restrict(id, p) != p) return "restriction along the identity of " + c.object(o).label() + " moves " + label(o, p);
  }
  const auto n = static_cast<int>(c.arrow_count());
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      auto h = c.compose(f, g);
      if (!h) continue;
      const int b = c.arrow(f).target;
      for (int p = 0; p < static_cast<int>(size(b)); ++p)
        if (restrict(*h, p) != restrict(g, restrict(f, p)))
          return "p . (f o g) != (p . f) . g for f = " + c.arrow_name(f) + ", g = " + c.arrow_name(g) + ", p = " +
                 label(b, p);
    }
  return std::nullopt;
}

Representable yoneda_presheaf(const BasePtr& base, int object) {
  const auto& c = *base;
  const auto objects = static_cast<int>(c.object_count());
  std::vector<std::vector<int>> arrows(objects);
  std::vector<std::vector<std::string>> labels(objects);
  for (int o = 0; o < objects; ++o) {
    arrows[o] = c.arrows_between(o, object);
    for (int a : arrows[o]) labels[o].push_back(c.arrow_name(a));
  }
  std::vector<std::vector<int>> restrictions(c.arrow_count());
  for (int f = 0; f < static_cast<int>(c.arrow_count()); ++f) {
    const auto& arr = c.arrow(f);
    for (int g : arrows[arr.target]) {
      const int h = *c.compose(g, f);
      auto& dom = arrows[arr.source];
      restrictions[f].push_back(static_cast<int>(std::find(dom.begin(), dom.end(), h) - dom.begin()));
    }
  }
  return Representable{Presheaf(base, std::move(labels), std::move(restrictions)), std::move(arrows)};
}

Presheaf constant_presheaf(const BasePtr& base, std::size_t size) {
  std::vector<std::vector<std::string>> labels(base->object_count());
  for (auto& l : labels)
    for (std::size_t i = 0; i < size; ++i) l.push_back("*" + std::to_string(i));
  std::vector<std::vector<int>> restrictions(base->arrow_count());
  for (auto& r : restrictions)
    for (std::size_t i = 0; i < size; ++i) r.push_back(static_cast<int>(i));
  return Presheaf(base, std::move(labels), std::move(restrictions));
}

ElementsCategory category_of_elements(const Presheaf& p) {
  ElementsCategory out;
  const auto& c = p.base();
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) {
    out.offsets.push_back(static_cast<int>(out.objects.size()));
    for (int e = 0; e < static_cast<int>(p.size(o)); ++e) out.objects.push_back({o, e});
  }
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    for (int e = 0; e < static_cast<int>(p.size(arr.target)); ++e)
      out.arrows.push_back({a, out.index_of(arr.source, p.restrict(a, e)), out.index_of(arr.target, e)});
  }
  return out;
}

std::optional<int> FramesFunctor::find(int object, const QuantumHom& h) const {
  const auto& list = homs[object];
  auto it = std::lower_bound(list.begin(), list.end(), h);
  if (it == list.end() || *it != h) return std::nullopt;
  return static_cast<int>(it - list.begin());
}

FramesFunctor frames_functor(const QuantumEventAlgebra& l, const BasePtr& base, const HomSearchLimits& limits) {
  const auto& c = *base;
  const auto objects = static_cast<int>(c.object_count());
  std::vector<std::vector<QuantumHom>> homs(objects);
  std::vector<std::vector<std::string>> labels(objects);
  for (int o = 0; o < objects; ++o) {
    const auto& b = c.object(o);
    homs[o] = enumerate_quantum_homs(modeling_object(b), l, limits);
    for (const auto& h : homs[o]) {
      std::string s = "(";
      for (int i = 0; i < b.atoms; ++i) s += (i ? "," : "") + l.name(h(Element{1} << i));
      labels[o].push_back(s + ")");
    }
  }
  std::vector<std::vector<int>> restrictions(c.arrow_count());
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    const auto mx = modeling_arrow(arr.hom);
    for (const auto& v : homs[arr.target]) {
      auto w = compose(v, mx);
      auto& dom = homs[arr.source];
      auto it = std::lower_bound(dom.begin(), dom.end(), w);
      if (it == dom.end() || *it != w) throw Error(ErrorKind::InconsistentInput, "precomposite is not a frame");
      restrictions[a].push_back(static_cast<int>(it - dom.begin()));
    }
  }
  Presheaf presheaf(base, std::move(labels), std::move(restrictions));
  return FramesFunctor{l, std::move(homs), std::move(presheaf)};
}

bool is_natural(const Presheaf& p, const Presheaf& q, const NaturalTransformation& phi) {
  const auto& c = p.base();
  if (phi.size() != c.object_count()) return false;
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) {
    if (phi[o].size() != p.size(o)) return false;
    for (int v : phi[o])
      if (v < 0 || static_cast<std::size_t>(v) >= q.size(o)) return false;
  }
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    for (int e = 0; e < static_cast<int>(p.size(arr.target)); ++e)
      if (phi[arr.source][p.restrict(a, e)] != q.restrict(a, phi[arr.target][e])) return false;
  }
  return true;
}

std::vector<NaturalTransformation> enumerate_natural_transformations(const Presheaf& p, const Presheaf& q,
                                                                     std::size_t limit) {
  const auto& c = p.base();
  const auto objects = static_cast<int>(c.object_count());
  if (q.base().object_count() != c.object_count() || q.base().arrow_count() != c.arrow_count())
    throw Error(ErrorKind::InconsistentInput, "presheaves live over different base categories");

  // Variables are (object, element) pairs, largest objects first so that
  // restrictions force the smaller components early.
  struct Var {
    int object, element;
  };
  std::vector<Var> vars;
  for (int o = objects - 1; o >= 0; --o)
    for (int e = 0; e < static_cast<int>(p.size(o)); ++e) vars.push_back({o, e});
  struct Constraint {
    int arrow, element;  // phi_src(P(a)(e)) == Q(a)(phi_tgt(e))
  };
  std::vector<Constraint> constraints;
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a)
    for (int e = 0; e < static_cast<int>(p.size(c.arrow(a).target)); ++e) constraints.push_back({a, e});

  NaturalTransformation phi(objects);
  for (int o = 0; o < objects; ++o) phi[o].assign(p.size(o), -1);
  std::vector<std::vector<std::size_t>> touching(vars.size());
  std::vector<std::vector<int>> var_index(objects);
  for (int o = 0; o < objects; ++o) var_index[o].assign(p.size(o), -1);
  for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i].object][vars[i].element] = static_cast<int>(i);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& arr = c.arrow(constraints[k].arrow);
    touching[var_index[arr.target][constraints[k].element]].push_back(k);
    touching[var_index[arr.source][p.restrict(constraints[k].arrow, constraints[k].element)]].push_back(k);
  }

  std::vector<NaturalTransformation> out;
  std::size_t nodes = 0;
  auto consistent = [&](std::size_t var) {
    for (std::size_t k : touching[var]) {
      const auto& con = constraints[k];
      const auto& arr = c.arrow(con.arrow);
      const int t = phi[arr.target][con.element];
      const int s = phi[arr.source][p.restrict(con.arrow, con.element)];
      if (t >= 0 && s >= 0 && s != q.restrict(con.arrow, t)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (++nodes > limit) throw Error(ErrorKind::SizeBound, "natural transformation search exceeded its node limit");
    if (i == vars.size()) {
      out.push_back(phi);
      return;
    }
    const auto [o, e] = vars[i];
    for (int v = 0; v < static_cast<int>(q.size(o)); ++v) {
      phi[o][e] = v;
      if (consistent(i)) self(self, i + 1);
    }
    phi[o][e] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qlogic
