#pragma once

// Lueders conditional probability Tr(P_A D P_A P_E) / Tr(D P_A) on small
// matrix models, exactly over real rationals or in complex double precision.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qlogic/rational.hpp"

namespace qlogic {

inline constexpr int kMaxMatrixDimension = 8;
inline constexpr double kLuedersTolerance = 1e-9;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  RationalMatrix(int n, std::vector<Rational> entries);  // row-major

  static RationalMatrix identity(int n);
  static RationalMatrix diagonal(const std::vector<Rational>& d);
  // |v><v| / <v|v>
  static RationalMatrix projector_onto(const std::vector<Rational>& v);

  int dim() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix transpose() const;
  Rational trace() const;
  // Gauss-Jordan; throws InconsistentInput when singular.
  RationalMatrix inverse() const;

  bool is_symmetric() const;
  bool is_projector() const;
  // Symmetric elimination; a zero pivot must have a zero row.
  bool is_positive_semidefinite() const;
  bool is_density() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// Validates D as a density and both P as projectors of the same dimension.
// Throws ValidationError on malformed operators and ZeroConditioningEvent
// when Tr(D P_A) = 0.
Rational lueders_conditional(const RationalMatrix& d, const RationalMatrix& pa, const RationalMatrix& pe);

// Same over complex matrices; operator checks and the zero test use
// kLuedersTolerance.
double lueders_conditional(const Eigen::MatrixXcd& d, const Eigen::MatrixXcd& pa, const Eigen::MatrixXcd& pe,
                           double tolerance = kLuedersTolerance);

// Tr(D P_A P_E) / Tr(D P_A), the commuting-projector form.
Rational commuting_conditional(const RationalMatrix& d, const RationalMatrix& pa, const RationalMatrix& pe);

}  // namespace qlogic
