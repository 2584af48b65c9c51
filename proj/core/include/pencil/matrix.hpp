#pragma once

#include <Eigen/Dense>

#include "pencil/errors.hpp"

namespace pencil {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kSymTol = 1e-10;   // symmetry validation, relative
inline constexpr double kEigTol = 1e-9;    // eigendecomposition residual, relative
inline constexpr double kRankTol = 1e-9;   // singular values below tol * sigma_max count as zero
inline constexpr double kTol = 1e-9;       // default verdict tolerance

/// Dense real symmetric matrix. Validates symmetry and finiteness on
/// construction and stores the symmetrized part, so downstream solvers can
/// rely on exact symmetry.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m, double sym_tol = kSymTol);

  static SymMatrix Zero(int n);
  static SymMatrix Identity(int n);
  static SymMatrix Diagonal(const Vector& d);

  int n() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double norm_max() const { return m_.cwiseAbs().maxCoeff(); }
  double norm_fro() const { return m_.norm(); }
  bool is_zero(double tol = kTol) const { return norm_max() <= tol; }

 private:
  struct Trusted {};
  SymMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// A + mu * B.
SymMatrix pencil_at(const SymMatrix& a, const SymMatrix& b, double mu);

/// Symmetrize an almost-symmetric product such as P^T M P.
SymMatrix symmetrize(const Matrix& m);

}  // namespace pencil
