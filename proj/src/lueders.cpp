#include "qlogic/lueders.hpp"

#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

RationalMatrix::RationalMatrix(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::InconsistentInput, "matrix of dimension " + std::to_string(n) + " needs " +
                                                  std::to_string(n * n) + " entries");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::projector_onto(const std::vector<Rational>& v) {
  RationalMatrix m(static_cast<int>(v.size()));
  Rational norm = 0;
  for (const auto& x : v) norm += x * x;
  if (norm == 0) throw Error(ErrorKind::InconsistentInput, "projector onto the zero vector");
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) m(i, j) = v[i] * v[j] / norm;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  RationalMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (int j = 0; j < n_; ++j) m(i, j) += (*this)(i, k) * o(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  RationalMatrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  RationalMatrix m(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a(*this), inv = identity(n_);
  for (int c = 0; c < n_; ++c) {
    int p = c;
    while (p < n_ && a(p, c) == 0) ++p;
    if (p == n_) throw Error(ErrorKind::InconsistentInput, "matrix is singular");
    for (int j = 0; j < n_; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational s = 1 / a(c, c);
    for (int j = 0; j < n_; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = 0; j < n_; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_symmetric() const { return *this == transpose(); }

bool RationalMatrix::is_projector() const { return is_symmetric() && *this * *this == *this; }

bool RationalMatrix::is_positive_semidefinite() const {
  if (!is_symmetric()) return false;
  RationalMatrix a(*this);
  for (int k = 0; k < n_; ++k) {
    if (a(k, k) < 0) return false;
    if (a(k, k) == 0) {
      for (int j = k + 1; j < n_; ++j)
        if (a(k, j) != 0) return false;
      continue;
    }
    for (int i = k + 1; i < n_; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (int j = k; j < n_; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

bool RationalMatrix::is_density() const { return trace() == 1 && is_positive_semidefinite(); }

namespace {

void check_shapes(int d, int pa, int pe) {
  if (d < 1 || d > kMaxMatrixDimension)
    throw Error(ErrorKind::ValidationError, "dimension must lie in 1.." + std::to_string(kMaxMatrixDimension));
  if (pa != d || pe != d) throw Error(ErrorKind::ValidationError, "operators have different dimensions");
}

}  // namespace

Rational lueders_conditional(const RationalMatrix& d, const RationalMatrix& pa, const RationalMatrix& pe) {
  check_shapes(d.dim(), pa.dim(), pe.dim());
  if (!d.is_density()) throw Error(ErrorKind::ValidationError, "D is not a density operator");
  if (!pa.is_projector()) throw Error(ErrorKind::ValidationError, "P_A is not a projector");
  if (!pe.is_projector()) throw Error(ErrorKind::ValidationError, "P_E is not a projector");
  const Rational denom = (d * pa).trace();
  if (denom == 0) throw Error(ErrorKind::ZeroConditioningEvent, "Tr(D P_A) = 0");
  return (pa * d * pa * pe).trace() / denom;
}

Rational commuting_conditional(const RationalMatrix& d, const RationalMatrix& pa, const RationalMatrix& pe) {
  const Rational denom = (d * pa).trace();
  if (denom == 0) throw Error(ErrorKind::ZeroConditioningEvent, "Tr(D P_A) = 0");
  return (d * pa * pe).trace() / denom;
}

double lueders_conditional(const Eigen::MatrixXcd& d, const Eigen::MatrixXcd& pa, const Eigen::MatrixXcd& pe,
                           double tolerance) {
  if (d.rows() != d.cols() || pa.rows() != pa.cols() || pe.rows() != pe.cols())
    throw Error(ErrorKind::ValidationError, "operators must be square");
  check_shapes(static_cast<int>(d.rows()), static_cast<int>(pa.rows()), static_cast<int>(pe.rows()));
  auto hermitian = [&](const Eigen::MatrixXcd& m) { return (m - m.adjoint()).norm() <= tolerance; };
  if (!hermitian(d) || std::abs(d.trace() - 1.0) > tolerance)
    throw Error(ErrorKind::ValidationError, "D is not a density operator");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(d);
  if (eig.eigenvalues().minCoeff() < -tolerance) throw Error(ErrorKind::ValidationError, "D is not positive");
  if (!hermitian(pa) || (pa * pa - pa).norm() > tolerance)
    throw Error(ErrorKind::ValidationError, "P_A is not a projector");
  if (!hermitian(pe) || (pe * pe - pe).norm() > tolerance)
    throw Error(ErrorKind::ValidationError, "P_E is not a projector");
  const double denom = (d * pa).trace().real();
  if (denom <= tolerance) throw Error(ErrorKind::ZeroConditioningEvent, "Tr(D P_A) is zero");
  return (pa * d * pa * pe).trace().real() / denom;
}

}  // namespace qlogic
