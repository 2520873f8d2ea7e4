#include "qlogic/valuations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qlogic {

std::vector<Valuation> enumerate_valuations(const QuantumEventAlgebra& l, const HomSearchLimits& limits) {
  const auto two = modeling_object(boolean_from_atoms(1));
  std::vector<Valuation> out;
  for (auto& h : enumerate_quantum_homs(l, two, limits)) out.push_back(std::move(h.map));
  return out;
}

bool is_valuation(const QuantumEventAlgebra& l, const Valuation& h) {
  if (h.size() != l.size()) return false;
  for (int v : h)
    if (v != 0 && v != 1) return false;
  return is_quantum_hom(l, modeling_object(boolean_from_atoms(1)), QuantumHom{h});
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void validate_scenario(const OrthogonalityScenario& s) {
  if (s.dim < 1) throw Error(ErrorKind::ValidationError, "dimension must be positive");
  if (s.has_coordinates()) {
    if (s.coords.size() != s.rays.size()) throw Error(ErrorKind::ValidationError, "coordinates missing for some rays");
    for (std::size_t r = 0; r < s.rays.size(); ++r) {
      if (static_cast<int>(s.coords[r].size()) != s.dim)
        throw Error(ErrorKind::ValidationError, "ray " + s.rays[r] + " does not have " + std::to_string(s.dim) + " coordinates");
      if (dot(s.coords[r], s.coords[r]) == 0) throw Error(ErrorKind::ValidationError, "ray " + s.rays[r] + " is zero");
    }
  }
  for (std::size_t c = 0; c < s.contexts.size(); ++c) {
    const auto& ctx = s.contexts[c];
    const std::string where = "context " + std::to_string(c + 1);
    if (static_cast<int>(ctx.size()) != s.dim)
      throw Error(ErrorKind::ValidationError, where + " has " + std::to_string(ctx.size()) + " rays, expected " +
                                                  std::to_string(s.dim));
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (ctx[i] < 0 || ctx[i] >= static_cast<int>(s.rays.size()))
        throw Error(ErrorKind::ValidationError, where + " names an undeclared ray");
      for (std::size_t j = 0; j < i; ++j) {
        if (ctx[i] == ctx[j]) throw Error(ErrorKind::ValidationError, where + " repeats ray " + s.rays[ctx[i]]);
        if (s.has_coordinates() && dot(s.coords[ctx[i]], s.coords[ctx[j]]) != 0)
          throw Error(ErrorKind::ValidationError,
                      where + ": rays " + s.rays[ctx[j]] + " and " + s.rays[ctx[i]] + " are not orthogonal");
      }
    }
  }
}

OrthogonalityScenario parse_scenario(const std::string& text) {
  OrthogonalityScenario s;
  std::map<std::string, int> index;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool any_coords = false, missing_coords = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);
    if (head == "dim") {
      if (rest.size() != 1 || s.dim != 0) throw Error(ErrorKind::ParseError, where + "expected a single 'dim <d>'");
      try {
        s.dim = std::stoi(rest[0]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, where + "dimension is not an integer");
      }
    } else if (head == "ray") {
      if (rest.empty()) throw Error(ErrorKind::ParseError, where + "ray needs a name");
      if (!index.emplace(rest[0], static_cast<int>(s.rays.size())).second)
        throw Error(ErrorKind::ParseError, where + "duplicate ray " + rest[0]);
      s.rays.push_back(rest[0]);
      std::vector<Rational> v;
      for (std::size_t i = 1; i < rest.size(); ++i) v.push_back(parse_rational(rest[i]));
      (v.empty() ? missing_coords : any_coords) = true;
      s.coords.push_back(std::move(v));
    } else if (head == "context") {
      std::vector<int> ctx;
      for (const auto& w : rest) {
        auto it = index.find(w);
        if (it == index.end()) throw Error(ErrorKind::ParseError, where + "unknown ray " + w);
        ctx.push_back(it->second);
      }
      s.contexts.push_back(std::move(ctx));
    } else {
      throw Error(ErrorKind::ParseError, where + "unknown directive '" + head + "'");
    }
  }
  if (s.dim == 0) throw Error(ErrorKind::ParseError, "missing 'dim' line");
  if (any_coords && missing_coords) throw Error(ErrorKind::ParseError, "either every ray has coordinates or none does");
  if (!any_coords) s.coords.clear();
  validate_scenario(s);
  return s;
}

std::string serialize_scenario(const OrthogonalityScenario& s) {
  std::string out = "dim " + std::to_string(s.dim) + "\n";
  for (std::size_t r = 0; r < s.rays.size(); ++r) {
    out += "ray " + s.rays[r];
    if (s.has_coordinates())
      for (const auto& x : s.coords[r]) out += " " + to_string(x);
    out += "\n";
  }
  for (const auto& ctx : s.contexts) {
    out += "context";
    for (int r : ctx) out += " " + s.rays[r];
    out += "\n";
  }
  return out;
}

std::vector<std::vector<int>> orthogonal_contexts(const std::vector<std::vector<Rational>>& coords, int dim) {
  const int n = static_cast<int>(coords.size());
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) orth[i][j] = i != j && dot(coords[i], coords[j]) == 0;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == dim) {
      out.push_back(cur);
      return;
    }
    for (int r = from; r < n; ++r)
      if (std::all_of(cur.begin(), cur.end(), [&](int c) { return orth[c][r]; })) {
        cur.push_back(r);
        self(self, r + 1);
        cur.pop_back();
      }
  };
  extend(extend, 0);
  return out;
}

std::uint64_t scenario_valuations(const OrthogonalityScenario& s) {
  const int n = static_cast<int>(s.rays.size());
  std::vector<std::vector<int>> contexts_of(n);
  for (int c = 0; c < static_cast<int>(s.contexts.size()); ++c)
    for (int r : s.contexts[c]) contexts_of[r].push_back(c);

  // value: -1 unassigned, 0 or 1. Branch on the context with the fewest open
  // rays that has no 1 yet; choosing which ray is its 1 partitions the
  // assignments, so leaves are counted once.
  std::vector<int> value(n, -1);
  std::uint64_t count = 0;
  auto search = [&](auto&& self) -> void {
    int best = -1;
    std::size_t best_open = SIZE_MAX;
    for (int c = 0; c < static_cast<int>(s.contexts.size()); ++c) {
      std::size_t open = 0;
      bool has_one = false;
      for (int r : s.contexts[c]) {
        if (value[r] == 1) has_one = true;
        if (value[r] == -1) ++open;
      }
      if (has_one) continue;
      if (open == 0) return;  // every ray 0: dead end
      if (open < best_open) {
        best_open = open;
        best = c;
      }
    }
    if (best < 0) {
      // Each ray lies in some context that already holds its 1, so the rays
      // still open are forced to 0; a ray in no context is free.
      std::uint64_t free_rays = 0;
      for (int r = 0; r < n; ++r)
        if (value[r] == -1 && contexts_of[r].empty()) ++free_rays;
      count += std::uint64_t{1} << free_rays;
      return;
    }
    std::vector<int> fixed_here;
    for (int r : s.contexts[best]) {
      if (value[r] != -1) continue;
      std::vector<int> changed{r};
      bool ok = true;
      value[r] = 1;
      for (int c : contexts_of[r])
        for (int q : s.contexts[c]) {
          if (q == r) continue;
          if (value[q] == 1) ok = false;
          else if (value[q] == -1) {
            value[q] = 0;
            changed.push_back(q);
          }
        }
      if (ok) self(self);
      for (int q : changed) value[q] = -1;
      // Later siblings count the assignments where r is 0.
      value[r] = 0;
      fixed_here.push_back(r);
    }
    for (int r : fixed_here) value[r] = -1;
  };
  search(search);
  return count;
}

}  // namespace qlogic
