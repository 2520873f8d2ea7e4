#pragma once

// Two-valued valuations and Kochen-Specker ray configurations.

#include <cstdint>
#include <string>
#include <vector>

#include "qlogic/hom.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

// A valuation as a 0/1 vector indexed by element.
using Valuation = std::vector<int>;

// Every quantum hom L -> 2, in lexicographic order.
std::vector<Valuation> enumerate_valuations(const QuantumEventAlgebra& l, const HomSearchLimits& limits = {});

bool is_valuation(const QuantumEventAlgebra& l, const Valuation& h);

struct OrthogonalityScenario {
  int dim = 0;
  std::vector<std::string> rays;
  std::vector<std::vector<Rational>> coords;  // per ray; empty when not given
  std::vector<std::vector<int>> contexts;      // ray indices

  bool has_coordinates() const { return !coords.empty(); }
};

// Line format:
//   dim <d>
//   ray <name> [<coordinate> ...]
//   context <ray> ... <ray>
// with '#' comments and blank lines ignored. Throws ParseError on syntax and
// ValidationError when a context has the wrong size, repeats a ray, or has
// two non-orthogonal rays.
OrthogonalityScenario parse_scenario(const std::string& text);
std::string serialize_scenario(const OrthogonalityScenario& s);
void validate_scenario(const OrthogonalityScenario& s);

// Maximal sets of dim pairwise orthogonal rays, each sorted, in
// lexicographic order.
std::vector<std::vector<int>> orthogonal_contexts(const std::vector<std::vector<Rational>>& coords, int dim);

// Number of 0/1 assignments to the rays with exactly one 1 per context.
std::uint64_t scenario_valuations(const OrthogonalityScenario& s);

}  // namespace qlogic
