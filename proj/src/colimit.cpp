#include "qlogic/colimit.hpp"

#include <algorithm>

#include "qlogic/disjoint_set.hpp"

namespace qlogic {

PointedSet::PointedSet(const Presheaf& p) {
  const auto& c = p.base();
  for (int o = 0; o < static_cast<int>(c.object_count()); ++o) {
    const auto width = c.object(o).size();
    widths_.push_back(width);
    element_offsets_.push_back(static_cast<int>(points_.size()));
    for (int e = 0; e < static_cast<int>(p.size(o)); ++e)
      for (std::size_t q = 0; q < width; ++q) points_.push_back({o, e, static_cast<Element>(q)});
  }
}

int PointedSet::index_of(int object, int element, Element point) const {
  return element_offsets_[object] + element * static_cast<int>(widths_[object]) + point;
}

std::vector<std::pair<int, int>> generator_pairs(const Presheaf& p, const PointedSet& points) {
  std::vector<std::pair<int, int>> out;
  const auto& c = p.base();
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    for (int e = 0; e < static_cast<int>(p.size(arr.target)); ++e) {
      const int restricted = p.restrict(a, e);
      for (Element q = 0; q <= arr.hom.source.top(); ++q)
        out.emplace_back(points.index_of(arr.source, restricted, q), points.index_of(arr.target, e, arr.hom(q)));
    }
  }
  return out;
}

namespace {

Partition partition_from(DisjointSet& ds, std::size_t n) {
  Partition out;
  out.class_of = ds.canonical_classes();
  int classes = 0;
  for (int c : out.class_of) classes = std::max(classes, c + 1);
  out.members.assign(classes, {});
  for (std::size_t i = 0; i < n; ++i) out.members[out.class_of[i]].push_back(static_cast<int>(i));
  return out;
}

}  // namespace

Partition generate_equivalence(const Presheaf& p) {
  PointedSet points(p);
  DisjointSet ds(points.size());
  for (auto [a, b] : generator_pairs(p, points)) ds.unite(a, b);
  return partition_from(ds, points.size());
}

Partition generate_equivalence(const Presheaf& p, const std::vector<std::vector<QuantumHom>>& frames) {
  const auto& c = p.base();
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    const auto mu = modeling_arrow(arr.hom);
    for (int e = 0; e < static_cast<int>(p.size(arr.target)); ++e)
      if (frames[arr.source][p.restrict(a, e)] != compose(frames[arr.target][e], mu))
        throw Error(ErrorKind::InconsistentInput,
                    "frame equation fails along " + c.arrow_name(a) + " at " + p.label(arr.target, e));
  }
  return generate_equivalence(p);
}

int QuotientAlgebra::class_of(int object, int element, Element point) const {
  return partition.class_of[points.index_of(object, element, point)];
}

std::string QuotientAlgebra::tensor_name(int point_index, const Presheaf& p) const {
  const auto& pt = points[point_index];
  const auto& b = p.base().object(pt.object);
  return p.label(pt.object, pt.element) + "⊗" + b.element_name(pt.point) + "@" + b.label();
}

QuotientAlgebra quotient_structure(const Presheaf& p, const Partition& input) {
  PointedSet points(p);
  if (points.size() == 0) {
    auto two = QuantumEventAlgebra::from_relation("L(P)", {"0", "1"}, {{0, 1}}, {1, 0}, 1);
    return QuotientAlgebra{std::move(points), Partition{}, std::move(two), true, false};
  }
  if (input.class_of.size() != points.size())
    throw Error(ErrorKind::InconsistentInput, "partition does not match the pointed frames");

  DisjointSet ds(points.size());
  for (const auto& m : input.members)
    for (std::size_t i = 1; i < m.size(); ++i) ds.unite(m[0], m[i]);
  int zero = -1, one = -1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    const Element top = p.base().object(pt.object).top();
    if (pt.point == 0) {
      if (zero < 0) zero = static_cast<int>(i);
      ds.unite(zero, i);
    }
    if (pt.point == top) {
      if (one < 0) one = static_cast<int>(i);
      ds.unite(one, i);
    }
  }
  const bool collapsed = ds.find(zero) == ds.find(one);
  if (collapsed)
    for (std::size_t i = 1; i < points.size(); ++i) ds.unite(0, i);
  Partition partition = partition_from(ds, points.size());
  const auto k = partition.class_count();

  if (collapsed) {
    auto single = QuantumEventAlgebra::from_relation("L(P)", {"0"}, {}, {0}, 0);
    return QuotientAlgebra{std::move(points), std::move(partition), std::move(single), false, true};
  }

  std::vector<Element> ortho(k, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    const Element comp = p.base().object(pt.object).complement(pt.point);
    const int target = partition.class_of[points.index_of(pt.object, pt.element, comp)];
    int& slot = ortho[partition.class_of[i]];
    if (slot >= 0 && slot != target)
      throw Error(ErrorKind::InconsistentInput, "ortho depends on the class representative");
    slot = target;
  }

  std::vector<std::uint8_t> rel(k * k, 0);
  for (std::size_t c = 0; c < k; ++c) rel[c * k + c] = 1;
  const auto& base = p.base();
  for (int o = 0; o < static_cast<int>(base.object_count()); ++o) {
    const Element top = base.object(o).top();
    for (int e = 0; e < static_cast<int>(p.size(o)); ++e)
      for (Element q1 = 0; q1 <= top; ++q1)
        for (Element q2 = q1;; q2 = (q2 + 1) | q1) {  // supersets of q1
          rel[partition.class_of[points.index_of(o, e, q1)] * k + partition.class_of[points.index_of(o, e, q2)]] = 1;
          if (q2 == top) break;
        }
  }
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (rel[i * k + m])
        for (std::size_t j = 0; j < k; ++j)
          if (rel[m * k + j]) rel[i * k + j] = 1;

  std::vector<std::string> names(k);
  const int zero_class = partition.class_of[zero];
  const int one_class = partition.class_of[one];
  for (std::size_t c = 0; c < k; ++c) {
    if (static_cast<int>(c) == zero_class) names[c] = "0";
    else if (static_cast<int>(c) == one_class) names[c] = "1";
    else {
      const auto& pt = points[partition.members[c][0]];
      const auto& b = base.object(pt.object);
      names[c] = p.label(pt.object, pt.element) + "⊗" + b.element_name(pt.point) + "@" + b.label();
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (rel[i * k + j] && rel[j * k + i])
        throw Error(ErrorKind::NotAPartialOrder,
                    "induced order identifies classes " + names[i] + " and " + names[j]);

  std::vector<std::pair<Element, Element>> leq;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && rel[i * k + j]) leq.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  auto algebra = QuantumEventAlgebra::from_relation("L(P)", std::move(names), leq, std::move(ortho), one_class);
  return QuotientAlgebra{std::move(points), std::move(partition), std::move(algebra), false, false};
}

QuotientAlgebra left_adjoint(const Presheaf& p) { return quotient_structure(p, generate_equivalence(p)); }

std::optional<QuantumHom> induced_hom(const QuotientAlgebra& q, const QuantumEventAlgebra& target,
                                      const std::vector<std::vector<QuantumHom>>& cocone) {
  if (q.empty_diagram) return QuantumHom{{target.bottom(), target.top()}};
  QuantumHom h{std::vector<Element>(q.algebra.size(), -1)};
  for (std::size_t i = 0; i < q.points.size(); ++i) {
    const auto& pt = q.points[i];
    const Element v = cocone[pt.object][pt.element](pt.point);
    Element& slot = h.map[q.partition.class_of[i]];
    if (slot >= 0 && slot != v) return std::nullopt;
    slot = v;
  }
  return h;
}

QuantumHom coprojection(const QuotientAlgebra& q, int object, int element) {
  const auto width = q.points.index_of(object, element + 1, 0) - q.points.index_of(object, element, 0);
  QuantumHom h{std::vector<Element>(width)};
  for (int x = 0; x < width; ++x) h.map[x] = q.class_of(object, element, x);
  return h;
}

namespace {

std::vector<std::vector<QuantumHom>> cocone_of(const FramesFunctor& r, const NaturalTransformation& phi) {
  std::vector<std::vector<QuantumHom>> out(phi.size());
  for (std::size_t o = 0; o < phi.size(); ++o)
    for (int v : phi[o]) out[o].push_back(r.homs[o][v]);
  return out;
}

}  // namespace

AdjunctionReport adjunction_bijection_check(const Presheaf& p, const QuantumEventAlgebra& l,
                                            const HomSearchLimits& limits) {
  AdjunctionReport report;
  const auto r = frames_functor(l, p.base_ptr(), limits);
  const auto nats = enumerate_natural_transformations(p, r.presheaf);
  const auto q = left_adjoint(p);
  const auto homs = enumerate_quantum_homs(q.algebra, l, limits);
  report.nat_count = nats.size();
  report.hom_count = homs.size();

  std::vector<int> image;
  for (std::size_t i = 0; i < nats.size(); ++i) {
    auto h = induced_hom(q, l, cocone_of(r, nats[i]));
    if (!h || !is_quantum_hom(q.algebra, l, *h)) {
      report.well_defined = false;
      report.failures.push_back("natural transformation #" + std::to_string(i) + " induces no quantum hom");
      continue;
    }
    image.push_back(static_cast<int>(std::lower_bound(homs.begin(), homs.end(), *h) - homs.begin()));
  }
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    report.injective = false;
    report.failures.push_back("two natural transformations induce the same hom");
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != homs.size()) {
    report.surjective = false;
    report.failures.push_back(std::to_string(homs.size() - sorted.size()) + " homs out of L(P) are not induced");
  }

  // Inverse direction: h |-> (h ∘ chi_{B,p}) must be natural and map back to h.
  const auto& c = p.base();
  for (std::size_t i = 0; i < homs.size(); ++i) {
    NaturalTransformation phi(c.object_count());
    bool ok = true;
    for (int o = 0; o < static_cast<int>(c.object_count()) && ok; ++o)
      for (int e = 0; e < static_cast<int>(p.size(o)) && ok; ++e) {
        auto idx = r.find(o, compose(homs[i], coprojection(q, o, e)));
        if (!idx) ok = false;
        else phi[o].push_back(*idx);
      }
    if (!ok || !is_natural(p, r.presheaf, phi) || !std::binary_search(nats.begin(), nats.end(), phi)) {
      report.inverse_agrees = false;
      report.failures.push_back("hom #" + std::to_string(i) + " does not restrict to a natural transformation");
      continue;
    }
    auto back = induced_hom(q, l, cocone_of(r, phi));
    if (!back || *back != homs[i]) {
      report.inverse_agrees = false;
      report.failures.push_back("hom #" + std::to_string(i) + " is not recovered from its restriction");
    }
  }
  return report;
}

bool adjunction_natural_in_target(const Presheaf& p, const QuantumEventAlgebra& l1, const QuantumEventAlgebra& l2,
                                  const HomSearchLimits& limits) {
  const auto r1 = frames_functor(l1, p.base_ptr(), limits);
  const auto r2 = frames_functor(l2, p.base_ptr(), limits);
  const auto q = left_adjoint(p);
  const auto& c = p.base();
  for (const auto& g : enumerate_quantum_homs(l1, l2, limits))
    for (const auto& phi : enumerate_natural_transformations(p, r1.presheaf)) {
      NaturalTransformation pushed(c.object_count());
      for (int o = 0; o < static_cast<int>(c.object_count()); ++o)
        for (int v : phi[o]) {
          auto idx = r2.find(o, compose(g, r1.homs[o][v]));
          if (!idx) return false;
          pushed[o].push_back(*idx);
        }
      auto lhs = induced_hom(q, l2, cocone_of(r2, pushed));
      auto inner = induced_hom(q, l1, cocone_of(r1, phi));
      if (!lhs || !inner || *lhs != compose(g, *inner)) return false;
    }
  return true;
}

}  // namespace qlogic
