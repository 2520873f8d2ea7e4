#include "qlogic/localization.hpp"

#include <algorithm>
#include <set>

namespace qlogic {

CoveringIdeal::CoveringIdeal(std::shared_ptr<const FramesFunctor> frames, std::vector<CoverRef> generators,
                             std::vector<std::vector<int>> members)
    : frames_(std::move(frames)), generators_(std::move(generators)), members_(std::move(members)) {}

CoveringIdeal::CoveringIdeal(std::shared_ptr<const FramesFunctor> frames, std::vector<CoverRef> generators)
    : frames_(std::move(frames)), generators_(std::move(generators)) {
  const auto& p = frames_->presheaf;
  const auto& c = p.base();
  std::vector<std::set<int>> closed(c.object_count());
  std::vector<CoverRef> work;
  for (const auto& g : generators_) {
    if (g.object < 0 || g.object >= static_cast<int>(c.object_count()) || g.frame < 0 ||
        g.frame >= static_cast<int>(p.size(g.object)))
      throw Error(ErrorKind::InconsistentInput, "generator is not a frame of R(L)");
    if (closed[g.object].insert(g.frame).second) work.push_back(g);
  }
  while (!work.empty()) {
    const auto cur = work.back();
    work.pop_back();
    for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
      const auto& arr = c.arrow(a);
      if (arr.target != cur.object) continue;
      const int r = p.restrict(a, cur.frame);
      if (closed[arr.source].insert(r).second) work.push_back({arr.source, r});
    }
  }
  for (const auto& s : closed) members_.emplace_back(s.begin(), s.end());
}

CoveringIdeal CoveringIdeal::empty(std::shared_ptr<const FramesFunctor> frames) {
  std::vector<std::vector<int>> members(frames->homs.size());
  return CoveringIdeal(std::move(frames), {}, std::move(members));
}

CoveringIdeal CoveringIdeal::all(std::shared_ptr<const FramesFunctor> frames) {
  std::vector<CoverRef> generators;
  std::vector<std::vector<int>> members(frames->homs.size());
  for (int o = 0; o < static_cast<int>(frames->homs.size()); ++o)
    for (int f = 0; f < static_cast<int>(frames->homs[o].size()); ++f) {
      members[o].push_back(f);
      generators.push_back({o, f});
    }
  return CoveringIdeal(std::move(frames), std::move(generators), std::move(members));
}

bool CoveringIdeal::contains(CoverRef c) const {
  return std::binary_search(members_[c.object].begin(), members_[c.object].end(), c.frame);
}

std::vector<CoverRef> CoveringIdeal::covers() const {
  std::vector<CoverRef> out;
  for (int o = 0; o < static_cast<int>(members_.size()); ++o)
    for (int f : members_[o]) out.push_back({o, f});
  return out;
}

std::string CoveringIdeal::cover_name(CoverRef c) const {
  return frames_->presheaf.base().object(c.object).label() + frames_->presheaf.label(c.object, c.frame);
}

bool CoveringIdeal::is_sieve_closed() const {
  const auto& p = frames_->presheaf;
  const auto& c = p.base();
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    for (int f : members_[arr.target])
      if (!contains({arr.source, p.restrict(a, f)})) return false;
  }
  return true;
}

bool CoveringIdeal::includes(const CoveringIdeal& other) const {
  for (std::size_t o = 0; o < members_.size(); ++o)
    if (!std::includes(members_[o].begin(), members_[o].end(), other.members_[o].begin(), other.members_[o].end()))
      return false;
  return true;
}

Presheaf CoveringIdeal::presheaf() const {
  const auto& p = frames_->presheaf;
  const auto& c = p.base();
  std::vector<std::vector<std::string>> labels(members_.size());
  for (std::size_t o = 0; o < members_.size(); ++o)
    for (int f : members_[o]) labels[o].push_back(p.label(static_cast<int>(o), f));
  std::vector<std::vector<int>> restrictions(c.arrow_count());
  for (int a = 0; a < static_cast<int>(c.arrow_count()); ++a) {
    const auto& arr = c.arrow(a);
    const auto& dom = members_[arr.source];
    for (int f : members_[arr.target]) {
      const int r = p.restrict(a, f);
      auto it = std::lower_bound(dom.begin(), dom.end(), r);
      if (it == dom.end() || *it != r)
        throw Error(ErrorKind::InconsistentInput, "ideal is not closed along " + c.arrow_name(a));
      restrictions[a].push_back(static_cast<int>(it - dom.begin()));
    }
  }
  return Presheaf(frames_->presheaf.base_ptr(), std::move(labels), std::move(restrictions));
}

std::vector<std::vector<QuantumHom>> CoveringIdeal::frame_lists() const {
  std::vector<std::vector<QuantumHom>> out(members_.size());
  for (std::size_t o = 0; o < members_.size(); ++o)
    for (int f : members_[o]) out[o].push_back(frames_->homs[o][f]);
  return out;
}

std::shared_ptr<const FramesFunctor> block_frames(const QuantumEventAlgebra& l, const HomSearchLimits& limits) {
  int k = 1;
  for (const auto& b : enumerate_blocks(l)) k = std::max(k, static_cast<int>(block_atoms(l, b).size()));
  return std::make_shared<const FramesFunctor>(frames_functor(l, full_base(k), limits));
}

CoverRef block_cover(const FramesFunctor& frames, const std::vector<Element>& block) {
  const auto& l = frames.algebra;
  const auto atoms = block_atoms(l, block);
  const int k = std::max<int>(1, static_cast<int>(atoms.size()));
  const auto object = frames.presheaf.base().find_object(k);
  if (!object) throw Error(ErrorKind::InconsistentInput, "no declared object 2^" + std::to_string(k));
  const auto b = frames.presheaf.base().object(*object);
  QuantumHom h{std::vector<Element>(b.size())};
  h.map[0] = l.bottom();
  if (atoms.empty()) h.map[1] = l.top();
  for (Element m = 1; m < static_cast<Element>(b.size()) && !atoms.empty(); ++m) {
    Element v = l.bottom();
    for (int i = 0; i < k; ++i)
      if (m & (1 << i)) v = *l.join(v, atoms[i]);
    h.map[m] = v;
  }
  auto idx = frames.find(*object, h);
  if (!idx) throw Error(ErrorKind::InconsistentInput, "block does not give a frame");
  return {*object, *idx};
}

CoveringIdeal block_ideal(std::shared_ptr<const FramesFunctor> frames, std::vector<std::vector<Element>> blocks) {
  if (blocks.empty()) blocks = enumerate_blocks(frames->algebra);
  std::vector<CoverRef> generators;
  for (const auto& b : blocks) generators.push_back(block_cover(*frames, b));
  return CoveringIdeal(std::move(frames), std::move(generators));
}

std::vector<Element> Overlap::image_in_l(const CoveringIdeal& ideal) const {
  const auto& psi = ideal.hom(first);
  std::set<Element> s;
  for (auto [x, y] : carrier) s.insert(psi(x));
  return {s.begin(), s.end()};
}

namespace {

bool subset(Element a, Element b) { return (a & ~b) == 0; }

}  // namespace

Overlap pullback_overlap(const CoveringIdeal& ideal, CoverRef first, CoverRef second) {
  const auto& base = ideal.frames().presheaf.base();
  const auto b1 = base.object(first.object);
  const auto b2 = base.object(second.object);
  const auto& psi1 = ideal.hom(first);
  const auto& psi2 = ideal.hom(second);

  std::vector<std::pair<Element, Element>> carrier;
  for (Element x = 0; x <= b1.top(); ++x)
    for (Element y = 0; y <= b2.top(); ++y)
      if (psi1(x) == psi2(y)) carrier.emplace_back(x, y);
  const auto n = carrier.size();
  auto index = [&](Element x, Element y) {
    return static_cast<Element>(std::lower_bound(carrier.begin(), carrier.end(), std::pair{x, y}) - carrier.begin());
  };

  std::vector<std::string> names;
  std::vector<Element> ortho;
  std::vector<std::pair<Element, Element>> leq;
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y] = carrier[i];
    names.push_back("(" + b1.element_name(x) + "," + b2.element_name(y) + ")");
    ortho.push_back(index(b1.complement(x), b2.complement(y)));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && subset(x, carrier[j].first) && subset(y, carrier[j].second))
        leq.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  }
  auto algebra = QuantumEventAlgebra::from_relation("overlap", std::move(names), leq, std::move(ortho),
                                                    index(b1.top(), b2.top()));
  QuantumHom to_first{std::vector<Element>(n)}, to_second{std::vector<Element>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    to_first.map[i] = carrier[i].first;
    to_second.map[i] = carrier[i].second;
  }
  Overlap out{first, second, std::move(carrier), std::move(algebra), std::move(to_first), std::move(to_second)};
  out.valid = check_axioms(out.algebra).passed() &&
              is_quantum_hom(out.algebra, modeling_object(b1), out.to_first) &&
              is_quantum_hom(out.algebra, modeling_object(b2), out.to_second);
  out.commutes = compose(psi1, out.to_first) == compose(psi2, out.to_second);
  out.trivial = out.image_in_l(ideal).size() == 2;
  return out;
}

std::vector<Element> pasting_map(const Overlap& overlap, std::size_t second_size) {
  std::vector<Element> out(second_size, -1);
  for (auto [x, y] : overlap.carrier) {
    if (out[y] >= 0 && out[y] != x) throw Error(ErrorKind::NonInjectiveCover, "pasting map is not a function");
    out[y] = x;
  }
  return out;
}

CocycleReport check_cocycles(const CoveringIdeal& ideal) {
  const auto& base = ideal.frames().presheaf.base();
  for (const auto& g : ideal.generators())
    if (!ideal.hom(g).injective())
      throw Error(ErrorKind::NonInjectiveCover, "generator " + ideal.cover_name(g) + " is not injective");

  CocycleReport report;
  std::vector<CoverRef> covers;
  for (const auto& c : ideal.covers()) {
    if (ideal.hom(c).injective()) covers.push_back(c);
    else ++report.skipped_noninjective;
  }
  const auto n = covers.size();
  report.covers_checked = n;

  // omega[i][j] = Omega_{B_i, B_j} : M(B_j) -> M(B_i), partial.
  std::vector<std::vector<std::vector<Element>>> omega(n, std::vector<std::vector<Element>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ov = pullback_overlap(ideal, covers[i], covers[j]);
      if (!ov.valid || !ov.commutes)
        report.failures.push_back({"overlap", {covers[i], covers[j]}, -1});
      omega[i][j] = pasting_map(ov, base.object(covers[j].object).size());
      ++report.pairs;
    }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = omega[i][i];
    for (Element x = 0; x < static_cast<Element>(w.size()); ++x)
      if (w[x] != x) {
        report.failures.push_back({"unit", {covers[i]}, x});
        break;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = omega[i][j];
      const auto& ji = omega[j][i];
      for (Element y = 0; y < static_cast<Element>(ij.size()); ++y)
        if (ij[y] >= 0 && ji[ij[y]] != y) {
          report.failures.push_back({"inverse", {covers[i], covers[j]}, y});
          break;
        }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ++report.triples;
        const auto& ij = omega[i][j];
        const auto& jk = omega[j][k];
        const auto& ik = omega[i][k];
        for (Element z = 0; z < static_cast<Element>(jk.size()); ++z) {
          const Element y = jk[z];
          if (y < 0 || ij[y] < 0) continue;
          if (ik[z] != ij[y]) {
            report.failures.push_back({"composition", {covers[i], covers[j], covers[k]}, z});
            break;
          }
        }
      }
  return report;
}

bool is_epimorphic_family(const CoveringIdeal& ideal) {
  const auto& l = ideal.algebra();
  std::vector<bool> hit(l.size(), false);
  for (const auto& c : ideal.covers())
    for (Element e : ideal.hom(c).map) hit[e] = true;
  return !ideal.covers().empty() && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

CounitReport counit_eval(const CoveringIdeal& ideal) {
  const auto& l = ideal.algebra();
  const auto p = ideal.presheaf();
  const auto frames = ideal.frame_lists();
  auto quotient = quotient_structure(p, generate_equivalence(p, frames));
  auto eps = induced_hom(quotient, l, frames);
  if (!eps) throw Error(ErrorKind::IllDefined, "equivalent pointed frames take different values in " + l.label());

  CounitReport report{std::move(quotient), std::move(*eps), false, false, false, {}, std::nullopt};
  const auto& q = report.quotient.algebra;
  report.preserves_structure = is_quantum_hom(q, l, report.counit);
  std::vector<int> first_class(l.size(), -1);
  for (Element c = 0; c < static_cast<Element>(q.size()); ++c) {
    int& slot = first_class[report.counit(c)];
    if (slot >= 0 && !report.collision) report.collision = std::pair{slot, c};
    if (slot < 0) slot = c;
  }
  report.injective = !report.collision;
  for (Element x = 0; x < static_cast<Element>(l.size()); ++x)
    if (first_class[x] < 0) report.missed.push_back(x);
  report.surjective = report.missed.empty();
  return report;
}

}  // namespace qlogic
