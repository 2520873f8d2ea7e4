#pragma once

// Probabilistic states p : L -> [0, 1] by exact rational linear programming.

#include <optional>
#include <string>
#include <vector>

#include "qlogic/oml.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

enum class Relation { Equal, LessEqual, GreaterEqual };

std::string_view to_string(Relation r);

// sum of coefficient * p(element) <relation> rhs
struct StateConstraint {
  std::vector<std::pair<Element, Rational>> terms;
  Relation relation = Relation::Equal;
  Rational rhs = 0;
};

// One row of the system over the variables p(0) .. p(n-1), all >= 0.
struct LinearRow {
  std::vector<Rational> coeffs;
  Relation relation = Relation::Equal;
  Rational rhs = 0;
  std::string origin;
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> state;  // when feasible
  std::vector<LinearRow> rows;
  // When infeasible: multipliers y, y_i <= 0 on <= rows and >= 0 on >= rows,
  // with sum y_i a_i <= 0 componentwise and sum y_i rhs_i > 0.
  std::vector<Rational> certificate;
};

// The rows p(1) = 1 and p(x v y) = p(x) + p(y) for every orthogonal pair,
// followed by the extra constraints.
std::vector<LinearRow> state_rows(const QuantumEventAlgebra& l, const std::vector<StateConstraint>& constraints);

// Exact feasibility. The returned state is the barycenter of the distinct
// vertices that maximize and minimize each non-constant p(x). Throws
// SizeBound above max_elements.
FeasibilityResult state_feasibility(const QuantumEventAlgebra& l, const std::vector<StateConstraint>& constraints = {},
                                    std::size_t max_elements = 32);

bool is_state(const QuantumEventAlgebra& l, const std::vector<Rational>& p);

bool is_farkas_certificate(const std::vector<LinearRow>& rows, const std::vector<Rational>& y);

}  // namespace qlogic
