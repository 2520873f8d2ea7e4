#include "qlogic/hom.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace qlogic {

bool QuantumHom::injective() const {
  std::vector<Element> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

QuantumHom compose(const QuantumHom& g, const QuantumHom& f) {
  QuantumHom h{std::vector<Element>(f.map.size())};
  for (std::size_t x = 0; x < f.map.size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

QuantumHom identity_hom(const QuantumEventAlgebra& l) {
  QuantumHom h{std::vector<Element>(l.size())};
  for (std::size_t x = 0; x < l.size(); ++x) h.map[x] = static_cast<Element>(x);
  return h;
}

bool is_quantum_hom(const QuantumEventAlgebra& s, const QuantumEventAlgebra& t, const QuantumHom& h) {
  if (h.map.size() != s.size()) return false;
  for (Element y : h.map)
    if (y < 0 || static_cast<std::size_t>(y) >= t.size()) return false;
  if (h(s.top()) != t.top()) return false;
  const auto n = static_cast<Element>(s.size());
  for (Element x = 0; x < n; ++x) {
    if (h(s.ortho(x)) != t.ortho(h(x))) return false;
    for (Element y = 0; y < n; ++y) {
      if (s.leq(x, y) && !t.leq(h(x), h(y))) return false;
      if (s.orthogonal(x, y)) {
        auto j = s.join(x, y);
        if (!j) continue;
        auto k = t.join(h(x), h(y));
        if (!k || *k != h(*j)) return false;
      }
    }
  }
  return true;
}

bool kernel_trivial(const QuantumEventAlgebra& s, const QuantumEventAlgebra& t, const QuantumHom& h) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (h.map[x] == t.bottom() && static_cast<Element>(x) != s.bottom()) return false;
  return true;
}

namespace {

class HomSearch {
 public:
  HomSearch(const QuantumEventAlgebra& s, const QuantumEventAlgebra& t, const HomSearchLimits& limits)
      : s_(s), t_(t), limits_(limits) {
    const auto n = static_cast<Element>(s.size());
    for (Element x = 0; x < n; ++x) order_.push_back(x);
    auto height = [&](Element x) {
      int h = 0;
      for (Element z = 0; z < n; ++z) h += s.leq(z, x);
      return h;
    };
    std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) { return height(a) < height(b); });
  }

  std::vector<QuantumHom> run() {
    std::vector<Element> assign(s_.size(), -1);
    if (propagate(assign, s_.top(), t_.top())) search(assign);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool propagate(std::vector<Element>& assign, Element x0, Element v0) {
    std::deque<std::pair<Element, Element>> queue{{x0, v0}};
    const auto n = static_cast<Element>(s_.size());
    while (!queue.empty()) {
      auto [x, v] = queue.front();
      queue.pop_front();
      if (assign[x] == v) continue;
      if (assign[x] != -1) return false;
      assign[x] = v;
      queue.emplace_back(s_.ortho(x), t_.ortho(v));
      for (Element y = 0; y < n; ++y) {
        const Element w = assign[y];
        if (w < 0 || y == x) continue;
        if (s_.leq(x, y) && !t_.leq(v, w)) return false;
        if (s_.leq(y, x) && !t_.leq(w, v)) return false;
        if (s_.orthogonal(x, y)) {
          auto j = s_.join(x, y);
          if (!j) continue;
          auto k = t_.join(v, w);
          if (!k) return false;
          queue.emplace_back(*j, *k);
        }
      }
    }
    return true;
  }

  void search(const std::vector<Element>& assign) {
    if (++nodes_ > limits_.max_nodes)
      throw Error(ErrorKind::SizeBound, "hom search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    auto next = std::find_if(order_.begin(), order_.end(), [&](Element x) { return assign[x] < 0; });
    if (next == order_.end()) {
      found_.push_back(QuantumHom{assign});
      return;
    }
    const auto m = static_cast<Element>(t_.size());
    for (Element v = 0; v < m; ++v) {
      std::vector<Element> trial = assign;
      if (propagate(trial, *next, v)) search(trial);
    }
  }

  const QuantumEventAlgebra& s_;
  const QuantumEventAlgebra& t_;
  HomSearchLimits limits_;
  std::vector<Element> order_;
  std::vector<QuantumHom> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<QuantumHom> enumerate_quantum_homs(const QuantumEventAlgebra& source, const QuantumEventAlgebra& target,
                                               const HomSearchLimits& limits) {
  if (source.size() > limits.max_source)
    throw Error(ErrorKind::SizeBound, "source '" + source.label() + "' has " + std::to_string(source.size()) +
                                          " elements, bound is " + std::to_string(limits.max_source));
  return HomSearch(source, target, limits).run();
}

QuantumHom modeling_arrow(const BooleanHom& f) { return QuantumHom{f.map}; }

std::optional<QuantumHom> find_isomorphism(const QuantumEventAlgebra& a, const QuantumEventAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto n = static_cast<Element>(a.size());
  for (const auto& h : enumerate_quantum_homs(a, b)) {
    if (!h.injective()) continue;
    bool reflects = true;
    for (Element x = 0; x < n && reflects; ++x)
      for (Element y = 0; y < n && reflects; ++y)
        if (b.leq(h(x), h(y)) && !a.leq(x, y)) reflects = false;
    if (reflects) return h;
  }
  return std::nullopt;
}

}  // namespace qlogic
