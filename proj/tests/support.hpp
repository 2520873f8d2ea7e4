#pragma once

// Fixtures and independent brute-force oracles shared by the test binaries.
// The oracles only use the order and ortho tables of an algebra; they never
// call the library's join, hom or block code.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/boolean.hpp"
#include "qlogic/hom.hpp"
#include "qlogic/io.hpp"
#include "qlogic/oml.hpp"

namespace qtest {

using qlogic::Element;
using qlogic::QuantumEventAlgebra;

inline std::string fixture(const std::string& name) { return std::string(QLOGIC_FIXTURES) + "/" + name; }

inline QuantumEventAlgebra boolean(int n) { return qlogic::modeling_object(qlogic::boolean_from_atoms(n)); }
inline QuantumEventAlgebra mo2() { return qlogic::load_lattice("mo2"); }
inline QuantumEventAlgebra mo3() { return qlogic::load_lattice("mo3"); }
inline QuantumEventAlgebra g12() { return qlogic::load_lattice("greechie"); }

// The six valid fixtures of the axiom suite.
inline std::vector<QuantumEventAlgebra> corpus() { return {boolean(1), boolean(2), boolean(3), mo2(), mo3(), g12()}; }

inline QuantumEventAlgebra build(const std::string& label, const std::vector<std::string>& names,
                                 const std::vector<std::pair<std::string, std::string>>& leq,
                                 const std::vector<std::pair<std::string, std::string>>& ortho_pairs,
                                 const std::string& top) {
  auto idx = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<Element>(i);
    throw std::runtime_error("no element " + n);
  };
  std::vector<std::pair<Element, Element>> rel;
  for (const auto& [a, b] : leq) rel.emplace_back(idx(a), idx(b));
  std::vector<Element> ortho(names.size(), -1);
  for (const auto& [a, b] : ortho_pairs) {
    ortho[idx(a)] = idx(b);
    ortho[idx(b)] = idx(a);
  }
  return QuantumEventAlgebra::from_relation(label, names, rel, ortho, idx(top));
}

// Least upper bound by scanning all upper bounds; -1 when absent.
inline Element scan_join(const QuantumEventAlgebra& l, Element x, Element y) {
  const auto n = static_cast<Element>(l.size());
  std::vector<Element> ub;
  for (Element z = 0; z < n; ++z)
    if (l.leq(x, z) && l.leq(y, z)) ub.push_back(z);
  for (Element z : ub) {
    bool least = true;
    for (Element w : ub) least = least && l.leq(z, w);
    if (least) return z;
  }
  return -1;
}

inline Element scan_meet(const QuantumEventAlgebra& l, Element x, Element y) {
  const auto n = static_cast<Element>(l.size());
  std::vector<Element> lb;
  for (Element z = 0; z < n; ++z)
    if (l.leq(z, x) && l.leq(z, y)) lb.push_back(z);
  for (Element z : lb) {
    bool greatest = true;
    for (Element w : lb) greatest = greatest && l.leq(w, z);
    if (greatest) return z;
  }
  return -1;
}

// Preserves 1, ortho, order and joins of orthogonal pairs.
class HomOracle {
 public:
  HomOracle(const QuantumEventAlgebra& s, const QuantumEventAlgebra& t) : s_(s), t_(t) {
    const auto n = static_cast<Element>(s.size());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (x != y && s.leq(x, y)) order_.emplace_back(x, y);
        if (x < y && s.leq(x, s.ortho(y))) orth_.push_back({x, y, scan_join(s, x, y)});
      }
    const auto m = static_cast<Element>(t.size());
    tjoin_.assign(m * m, -1);
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b) tjoin_[a * m + b] = scan_join(t, a, b);
  }

  bool operator()(const std::vector<Element>& h) const {
    if (h[s_.top()] != t_.top()) return false;
    for (Element x = 0; x < static_cast<Element>(s_.size()); ++x)
      if (h[s_.ortho(x)] != t_.ortho(h[x])) return false;
    for (auto [x, y] : order_)
      if (!t_.leq(h[x], h[y])) return false;
    const auto m = static_cast<Element>(t_.size());
    for (const auto& o : orth_) {
      if (o.join < 0) continue;
      if (tjoin_[h[o.x] * m + h[o.y]] != h[o.join]) return false;
    }
    return true;
  }

 private:
  struct Orth {
    Element x, y, join;
  };
  const QuantumEventAlgebra& s_;
  const QuantumEventAlgebra& t_;
  std::vector<std::pair<Element, Element>> order_;
  std::vector<Orth> orth_;
  std::vector<Element> tjoin_;
};

// Every map whose values on one representative of each {x, x*} pair are
// free; the rest is fixed by h(x*) = h(x)*, which any hom must satisfy.
// When `full` is set the candidates are all |t|^|s| maps instead.
inline std::vector<std::vector<Element>> brute_force_homs(const QuantumEventAlgebra& s, const QuantumEventAlgebra& t,
                                                          bool full = false) {
  const HomOracle ok(s, t);
  const auto n = static_cast<Element>(s.size());
  const auto m = static_cast<Element>(t.size());
  std::vector<Element> free;
  for (Element x = 0; x < n; ++x)
    if (full || x <= s.ortho(x)) free.push_back(x);
  std::vector<Element> h(n, 0);
  std::vector<std::vector<Element>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      if (ok(h)) out.push_back(h);
      return;
    }
    for (Element v = 0; v < m; ++v) {
      h[free[i]] = v;
      if (!full) h[s.ortho(free[i])] = t.ortho(v);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Direct Boolean-hom test on bitmask algebras over all maps |B|^|C|.
inline std::vector<std::vector<Element>> brute_force_boolean_homs(int c_atoms, int b_atoms) {
  const Element cn = 1 << c_atoms, bn = 1 << b_atoms;
  const Element ctop = cn - 1, btop = bn - 1;
  std::vector<Element> h(cn, 0);
  std::vector<std::vector<Element>> out;
  std::function<void(Element)> rec = [&](Element x) {
    if (x == cn) {
      for (Element a = 0; a < cn; ++a)
        for (Element b = 0; b < cn; ++b)
          if (h[a | b] != (h[a] | h[b]) || h[a & b] != (h[a] & h[b])) return;
      out.push_back(h);
      return;
    }
    for (Element v = 0; v < bn; ++v) {
      if (x == 0 && v != 0) break;
      if (x == ctop && v != btop) continue;
      if ((ctop ^ x) < x && h[ctop ^ x] != (btop ^ v)) continue;
      h[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

inline std::vector<std::vector<Element>> maps_of(const std::vector<qlogic::QuantumHom>& homs) {
  std::vector<std::vector<Element>> out;
  for (const auto& h : homs) out.push_back(h.map);
  return out;
}

// Mutations of small valid algebras, each breaking the named condition.
struct Mutation {
  char condition;
  QuantumEventAlgebra algebra;
};

inline std::vector<Mutation> mutations() {
  std::vector<Mutation> out;
  // [a]: the declared unit is the atom a.
  out.push_back({'a', build("MO2 with top a", {"0", "a", "a*", "b", "b*", "1"},
                            {{"0", "a"}, {"0", "a*"}, {"0", "b"}, {"0", "b*"}, {"a", "1"}, {"a*", "1"}, {"b", "1"},
                             {"b*", "1"}},
                            {{"0", "1"}, {"a", "a*"}, {"b", "b*"}}, "a")});
  // [b]: ortho is a bijection that cycles a -> b -> a* -> b* -> a.
  {
    std::vector<std::string> names{"0", "a", "a*", "b", "b*", "1"};
    std::vector<std::pair<Element, Element>> leq{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    out.push_back({'b', QuantumEventAlgebra::from_relation("MO2 with a cyclic ortho", names, leq, {5, 3, 4, 2, 1, 0}, 5)});
  }
  // [c]: a chain 0 < a < a* < 1, so a joined with a* is a*.
  out.push_back({'c', build("chain", {"0", "a", "a*", "1"}, {{"0", "a"}, {"a", "a*"}, {"a*", "1"}},
                            {{"0", "1"}, {"a", "a*"}}, "1")});
  // [d]: ortho fixes both middle elements of the chain 0 < a < b < 1.
  {
    std::vector<std::string> names{"0", "a", "b", "1"};
    out.push_back({'d', QuantumEventAlgebra::from_relation("chain with fixed points", names, {{0, 1}, {1, 2}, {2, 3}},
                                                           {3, 1, 2, 0}, 3)});
  }
  // [e]: x and y are orthogonal with two minimal upper bounds u and v.
  out.push_back({'e', build("no join", {"0", "x", "y", "u", "v", "u*", "v*", "x*", "y*", "1"},
                            {{"0", "x"}, {"0", "y"}, {"x", "u"}, {"x", "v"}, {"y", "u"}, {"y", "v"}, {"u*", "x*"},
                             {"u*", "y*"}, {"v*", "x*"}, {"v*", "y*"}, {"x", "y*"}, {"y", "x*"}, {"u", "1"},
                             {"v", "1"}, {"x*", "1"}, {"y*", "1"}, {"0", "u*"}, {"0", "v*"}},
                            {{"0", "1"}, {"x", "x*"}, {"y", "y*"}, {"u", "u*"}, {"v", "v*"}}, "1")});
  // [f]: the benzene ring O6.
  out.push_back({'f', qlogic::read_lattice(qlogic::read_file(fixture("o6.json")))});
  return out;
}

}  // namespace qtest
