#include "qlogic/oml.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlogic {

namespace {

std::string pair_text(const QuantumEventAlgebra& l, Element x, Element y) {
  return "(" + l.name(x) + ", " + l.name(y) + ")";
}

// Least element of the set selected by `bound`, if one exists.
template <typename Pred>
Element least_among(std::size_t n, const std::vector<std::uint8_t>& order, Pred bound) {
  Element best = -1;
  for (std::size_t z = 0; z < n; ++z) {
    if (!bound(z)) continue;
    if (best < 0 || order[z * n + best]) best = static_cast<Element>(z);
  }
  if (best < 0) return -1;
  for (std::size_t z = 0; z < n; ++z) {
    if (bound(z) && !order[best * n + z]) return -1;
  }
  return best;
}

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    int v = p.front();
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[v][w]) np.push_back(w);
    for (int w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(p.begin());
    x.push_back(v);
  }
}

}  // namespace

QuantumEventAlgebra QuantumEventAlgebra::from_relation(std::string label, std::vector<std::string> names,
                                                       const std::vector<std::pair<Element, Element>>& leq,
                                                       std::vector<Element> ortho, Element top) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::MalformedInput, "algebra has no elements");
  if (ortho.size() != n) throw Error(ErrorKind::MalformedInput, "ortho is not total on the elements");
  auto in_range = [n](Element x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  if (!in_range(top)) throw Error(ErrorKind::MalformedInput, "top is not an element");
  {
    std::set<std::string> seen;
    for (const auto& nm : names)
      if (!seen.insert(nm).second) throw Error(ErrorKind::MalformedInput, "duplicate element name '" + nm + "'");
  }
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (!in_range(ortho[x])) throw Error(ErrorKind::MalformedInput, "ortho maps outside the elements");
    if (hit[ortho[x]])
      throw Error(ErrorKind::MalformedInput, "ortho is not a bijection: '" + names[ortho[x]] + "' is hit twice");
    hit[ortho[x]] = true;
  }

  QuantumEventAlgebra l;
  l.label_ = std::move(label);
  l.names_ = std::move(names);
  l.ortho_ = std::move(ortho);
  l.top_ = top;
  l.order_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) l.order_[x * n + x] = 1;
  for (auto [x, y] : leq) {
    if (!in_range(x) || !in_range(y)) throw Error(ErrorKind::MalformedInput, "order pair outside the elements");
    l.order_[x * n + y] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (l.order_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (l.order_[k * n + j]) l.order_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (l.order_[i * n + j] && l.order_[j * n + i])
        throw Error(ErrorKind::MalformedInput,
                    "order is not antisymmetric on '" + l.names_[i] + "' and '" + l.names_[j] + "'");

  l.joins_.assign(n * n, -1);
  l.meets_.assign(n * n, -1);
  const auto& ord = l.order_;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      Element j = least_among(n, ord, [&](std::size_t z) { return ord[x * n + z] && ord[y * n + z]; });
      // Greatest lower bound.
      Element m = -1;
      for (std::size_t z = 0; z < n; ++z) {
        if (!(ord[z * n + x] && ord[z * n + y])) continue;
        if (m < 0 || ord[m * n + z]) m = static_cast<Element>(z);
      }
      if (m >= 0) {
        for (std::size_t z = 0; z < n; ++z)
          if (ord[z * n + x] && ord[z * n + y] && !ord[z * n + m]) {
            m = -1;
            break;
          }
      }
      l.joins_[x * n + y] = l.joins_[y * n + x] = j;
      l.meets_[x * n + y] = l.meets_[y * n + x] = m;
    }
  }
  return l;
}

std::optional<Element> QuantumEventAlgebra::find(const std::string& nm) const {
  auto it = std::find(names_.begin(), names_.end(), nm);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

std::optional<Element> QuantumEventAlgebra::join(Element x, Element y) const {
  Element j = joins_[x * size() + y];
  if (j < 0) return std::nullopt;
  return j;
}

std::optional<Element> QuantumEventAlgebra::meet(Element x, Element y) const {
  Element m = meets_[x * size() + y];
  if (m < 0) return std::nullopt;
  return m;
}

std::vector<std::pair<Element, Element>> QuantumEventAlgebra::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = static_cast<Element>(size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool direct = true;
      for (Element z = 0; z < n && direct; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
      if (direct) out.emplace_back(x, y);
    }
  return out;
}

std::vector<Element> QuantumEventAlgebra::atoms() const {
  std::vector<Element> out;
  const auto n = static_cast<Element>(size());
  const Element zero = bottom();
  for (Element x = 0; x < n; ++x) {
    if (x == zero) continue;
    bool minimal = true;
    for (Element z = 0; z < n && minimal; ++z)
      if (z != zero && z != x && leq(z, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

QuantumEventAlgebra QuantumEventAlgebra::relabeled(std::string label) const {
  QuantumEventAlgebra copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& AxiomReport::condition(char c) const {
  for (const auto& check : checks)
    if (check.condition == c) return check;
  throw std::out_of_range(std::string("no axiom condition ") + c);
}

std::vector<char> AxiomReport::failed() const {
  std::vector<char> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.condition);
  return out;
}

AxiomReport check_axioms(const QuantumEventAlgebra& l) {
  AxiomReport report;
  for (char c : std::string("abcdef")) report.checks.push_back(AxiomCheck{c, true, std::nullopt, {}});
  auto fail = [&](char c, Element x, Element y, std::string detail) {
    auto& check = report.checks[c - 'a'];
    if (!check.passed) return;
    check.passed = false;
    check.witness = std::make_pair(x, y);
    check.detail = std::move(detail);
  };

  const auto n = static_cast<Element>(l.size());
  const Element one = l.top();
  for (Element x = 0; x < n; ++x) {
    if (!l.leq(x, one)) fail('a', x, one, pair_text(l, x, one) + ": element is not below 1");
    if (l.ortho(l.ortho(x)) != x) fail('b', x, l.ortho(l.ortho(x)), pair_text(l, x, l.ortho(l.ortho(x))) + ": x** != x");
    auto j = l.join(x, l.ortho(x));
    if (!j || *j != one) fail('c', x, l.ortho(x), pair_text(l, x, l.ortho(x)) + ": x v x* is not 1");
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(l.ortho(y), l.ortho(x)))
        fail('d', x, y, pair_text(l, x, y) + ": x <= y but not y* <= x*");
      if (l.orthogonal(x, y) && !l.join(x, y)) fail('e', x, y, pair_text(l, x, y) + ": orthogonal pair has no join");
      if (l.leq(x, y) && report.checks[5].passed && !compatible(l, x, y))
        fail('f', x, y, pair_text(l, x, y) + ": comparable pair is not compatible");
    }
  return report;
}

bool is_boolean_subalgebra(const QuantumEventAlgebra& l, const std::vector<Element>& carrier) {
  std::vector<bool> in(l.size(), false);
  for (Element x : carrier) in[x] = true;
  if (!in[l.top()] || !in[l.bottom()]) return false;
  std::vector<Element> jt(carrier.size() * carrier.size()), mt(carrier.size() * carrier.size());
  std::map<Element, std::size_t> pos;
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = i;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    Element x = carrier[i];
    if (!in[l.ortho(x)]) return false;
    for (std::size_t k = 0; k < carrier.size(); ++k) {
      auto j = l.join(x, carrier[k]);
      auto m = l.meet(x, carrier[k]);
      if (!j || !m || !in[*j] || !in[*m]) return false;
      jt[i * carrier.size() + k] = *j;
      mt[i * carrier.size() + k] = *m;
    }
    if (*l.join(x, l.ortho(x)) != l.top() || *l.meet(x, l.ortho(x)) != l.bottom()) return false;
  }
  const std::size_t c = carrier.size();
  auto J = [&](Element a, Element b) { return jt[pos[a] * c + pos[b]]; };
  auto M = [&](Element a, Element b) { return mt[pos[a] * c + pos[b]]; };
  for (Element x : carrier)
    for (Element y : carrier)
      for (Element z : carrier)
        if (M(x, J(y, z)) != J(M(x, y), M(x, z))) return false;
  return true;
}

GeneratedSubalgebra generated_boolean(const QuantumEventAlgebra& l, const std::vector<Element>& seeds) {
  std::vector<bool> in(l.size(), false);
  std::vector<Element> carrier;
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      carrier.push_back(x);
      return true;
    }
    return false;
  };
  add(l.bottom());
  add(l.top());
  for (Element s : seeds) {
    if (s < 0 || static_cast<std::size_t>(s) >= l.size())
      throw Error(ErrorKind::MalformedInput, "seed is not an element");
    add(s);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < carrier.size(); ++i) changed |= add(l.ortho(carrier[i]));
    const std::size_t c = carrier.size();
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t k = 0; k < c; ++k) {
        Element x = carrier[i], y = carrier[k];
        if (!l.orthogonal(x, y)) continue;
        auto j = l.join(x, y);
        if (!j)
          throw Error(ErrorKind::ClosureFailure,
                      "orthogonal pair " + pair_text(l, x, y) + " has no join in " + l.label());
        changed |= add(*j);
      }
  }
  std::sort(carrier.begin(), carrier.end());
  GeneratedSubalgebra out;
  out.is_boolean = is_boolean_subalgebra(l, carrier);
  out.carrier = std::move(carrier);
  return out;
}

bool compatible(const QuantumEventAlgebra& l, Element x, Element y) {
  try {
    return generated_boolean(l, {x, l.ortho(x), y, l.ortho(y)}).is_boolean;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ClosureFailure) return false;
    throw;
  }
}

std::vector<std::vector<Element>> enumerate_blocks(const QuantumEventAlgebra& l) {
  const auto atoms = l.atoms();
  std::vector<std::vector<bool>> adj(atoms.size(), std::vector<bool>(atoms.size(), false));
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t k = 0; k < atoms.size(); ++k)
      adj[i][k] = i != k && l.orthogonal(atoms[i], atoms[k]);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r, all(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) all[i] = static_cast<int>(i);
  bron_kerbosch(adj, r, all, {}, cliques);

  std::set<std::vector<Element>> found;
  if (atoms.empty()) found.insert({l.bottom()});  // degenerate one-element algebra
  for (const auto& clique : cliques) {
    std::vector<Element> seeds;
    for (int i : clique) seeds.push_back(atoms[i]);
    try {
      auto gen = generated_boolean(l, seeds);
      if (gen.is_boolean) found.insert(gen.carrier);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ClosureFailure) throw;
    }
  }
  std::vector<std::vector<Element>> blocks;
  for (const auto& b : found) {
    bool maximal = true;
    for (const auto& other : found)
      if (other != b && std::includes(other.begin(), other.end(), b.begin(), b.end())) maximal = false;
    if (maximal) blocks.push_back(b);
  }
  return blocks;  // std::set order is lexicographic
}

std::vector<Element> block_atoms(const QuantumEventAlgebra& l, const std::vector<Element>& carrier) {
  std::vector<Element> out;
  for (Element x : carrier) {
    if (x == l.bottom()) continue;
    bool minimal = true;
    for (Element z : carrier)
      if (z != x && z != l.bottom() && l.leq(z, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

bool satisfies_orthomodular_law(const QuantumEventAlgebra& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!l.leq(x, y)) continue;
      auto m = l.meet(y, l.ortho(x));
      if (!m) return false;
      auto j = l.join(x, *m);
      if (!j || *j != y) return false;
    }
  return true;
}

}  // namespace qlogic
