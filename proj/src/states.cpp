#include "qlogic/states.hpp"

#include <set>

namespace qlogic {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "=";
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

std::vector<LinearRow> state_rows(const QuantumEventAlgebra& l, const std::vector<StateConstraint>& constraints) {
  const auto n = l.size();
  std::vector<LinearRow> rows;
  LinearRow unit{std::vector<Rational>(n), Relation::Equal, 1, "p(1) = 1"};
  unit.coeffs[l.top()] = 1;
  rows.push_back(std::move(unit));
  for (Element x = 0; x < static_cast<Element>(n); ++x)
    for (Element y = x; y < static_cast<Element>(n); ++y) {
      if (!l.orthogonal(x, y)) continue;
      const auto j = l.join(x, y);
      if (!j) throw Error(ErrorKind::MalformedInput, "orthogonal pair without a join");
      LinearRow r{std::vector<Rational>(n), Relation::Equal, 0,
                  "p(" + l.name(*j) + ") = p(" + l.name(x) + ") + p(" + l.name(y) + ")"};
      r.coeffs[*j] += 1;
      r.coeffs[x] -= 1;
      r.coeffs[y] -= 1;
      rows.push_back(std::move(r));
    }
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    LinearRow r{std::vector<Rational>(n), constraints[c].relation, constraints[c].rhs,
                "constraint " + std::to_string(c + 1)};
    for (const auto& [e, coeff] : constraints[c].terms) {
      if (e < 0 || e >= static_cast<Element>(n))
        throw Error(ErrorKind::InconsistentInput, "constraint names an element outside " + l.label());
      r.coeffs[e] += coeff;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

// Dense tableau for A x = b, x >= 0, b >= 0, with one artificial per row.
// Pivoting follows Bland's rule, so it terminates without perturbation.
class Simplex {
 public:
  Simplex(const std::vector<LinearRow>& rows, std::size_t vars) : vars_(vars) {
    for (const auto& r : rows)
      if (r.relation != Relation::Equal) ++slacks_;
    m_ = rows.size();
    cols_ = vars_ + slacks_ + m_;
    t_.assign(m_, std::vector<Rational>(cols_ + 1));
    sign_.assign(m_, 1);
    basis_.resize(m_);
    std::size_t slack = vars_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = rows[i];
      for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = r.coeffs[j];
      if (r.relation == Relation::LessEqual) t_[i][slack++] = 1;
      if (r.relation == Relation::GreaterEqual) t_[i][slack++] = -1;
      t_[i][cols_] = r.rhs;
      if (r.rhs < 0) {
        sign_[i] = -1;
        for (auto& v : t_[i]) v = -v;
      }
      t_[i][art(i)] = 1;
      basis_[i] = art(i);
    }
  }

  // Returns the phase-one optimum; zero means feasible.
  Rational phase_one() {
    z_.assign(cols_ + 1, 0);
    for (std::size_t i = 0; i < m_; ++i) z_[art(i)] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= t_[i][j];
    run(cols_);
    return -z_[cols_];
  }

  // Phase-one duals, in the orientation of the original rows.
  std::vector<Rational> farkas() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = (1 - z_[art(i)]) * sign_[i];
    return y;
  }

  void drop_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < vars_ + slacks_) continue;
      for (std::size_t j = 0; j < vars_ + slacks_; ++j)
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  // Minimizes c . x over the feasible set; artificials never re-enter.
  std::vector<Rational> minimize(const std::vector<Rational>& c) {
    z_.assign(cols_ + 1, 0);
    for (std::size_t j = 0; j < vars_; ++j) z_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t b = basis_[i];
      if (b >= vars_ || c[b] == 0) continue;
      const Rational cb = c[b];
      for (std::size_t j = 0; j <= cols_; ++j) z_[j] -= cb * t_[i][j];
    }
    run(vars_ + slacks_);
    return point();
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(vars_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < vars_) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  std::size_t art(std::size_t i) const { return vars_ + slacks_ + i; }

  void run(std::size_t allowed) {
    for (;;) {
      std::size_t q = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (z_[j] < 0) {
          q = j;
          break;
        }
      if (q == allowed) return;
      std::size_t p = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][q] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][q];
        if (p == m_ || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
          p = i;
          best = ratio;
        }
      }
      if (p == m_) throw Error(ErrorKind::InconsistentInput, "state polytope is unbounded");
      pivot(p, q);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    const Rational inv = 1 / t_[p][q];
    for (auto& v : t_[p]) v *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[q] == 0) return;
      const Rational f = row[q];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[p][j] != 0) row[j] -= f * t_[p][j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != p) eliminate(t_[i]);
    eliminate(z_);
    basis_[p] = q;
  }

  std::size_t vars_ = 0, slacks_ = 0, m_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> z_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityResult state_feasibility(const QuantumEventAlgebra& l, const std::vector<StateConstraint>& constraints,
                                    std::size_t max_elements) {
  if (l.size() > max_elements)
    throw Error(ErrorKind::SizeBound, l.label() + " has " + std::to_string(l.size()) + " elements, bound is " +
                                          std::to_string(max_elements));
  FeasibilityResult out;
  out.rows = state_rows(l, constraints);
  const auto n = l.size();
  Simplex lp(out.rows, n);
  if (lp.phase_one() > 0) {
    out.certificate = lp.farkas();
    return out;
  }
  out.feasible = true;
  lp.drop_artificials();

  std::set<std::vector<Rational>> vertices;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<Rational> c(n);
    c[e] = 1;
    Simplex low = lp;
    auto lo = low.minimize(c);
    c[e] = -1;
    Simplex high = lp;
    auto hi = high.minimize(c);
    if (lo[e] != hi[e]) {
      vertices.insert(std::move(lo));
      vertices.insert(std::move(hi));
    }
  }
  if (vertices.empty()) vertices.insert(lp.point());
  out.state.assign(n, 0);
  for (const auto& v : vertices)
    for (std::size_t e = 0; e < n; ++e) out.state[e] += v[e];
  for (auto& x : out.state) x /= static_cast<long>(vertices.size());
  return out;
}

bool is_state(const QuantumEventAlgebra& l, const std::vector<Rational>& p) {
  if (p.size() != l.size() || p[l.top()] != 1) return false;
  for (const auto& x : p)
    if (x < 0 || x > 1) return false;
  for (Element x = 0; x < static_cast<Element>(l.size()); ++x)
    for (Element y = 0; y < static_cast<Element>(l.size()); ++y)
      if (l.orthogonal(x, y) && p[*l.join(x, y)] != p[x] + p[y]) return false;
  return true;
}

bool is_farkas_certificate(const std::vector<LinearRow>& rows, const std::vector<Rational>& y) {
  if (rows.empty() || y.size() != rows.size()) return false;
  const auto n = rows[0].coeffs.size();
  std::vector<Rational> combo(n);
  Rational rhs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation == Relation::LessEqual && y[i] > 0) return false;
    if (rows[i].relation == Relation::GreaterEqual && y[i] < 0) return false;
    for (std::size_t j = 0; j < n; ++j) combo[j] += y[i] * rows[i].coeffs[j];
    rhs += y[i] * rows[i].rhs;
  }
  for (const auto& v : combo)
    if (v > 0) return false;
  return rhs > 0;
}

}  // namespace qlogic
