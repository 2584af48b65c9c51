#pragma once

#include <vector>

#include "pencil/matrix.hpp"

namespace pencil {

/// Eigendecomposition of a symmetric matrix: M = V diag(values) V^T,
/// values ascending, V orthonormal.
struct SymEig {
  Vector values;
  Matrix vectors;
};

SymEig sym_eig(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

/// Three-way positive-semidefiniteness verdict. `ambiguous` means the minimum
/// eigenvalue sits so close to the -tol*scale threshold that the verdict could
/// flip; callers must treat it as a reportable condition.
enum class Psd { yes, no, ambiguous };

Psd is_psd(const SymMatrix& m, double tol = kTol);

/// One real eigenvalue of a general real matrix, with multiplicities.
struct RealEig {
  double value = 0.0;
  int algebraic = 0;
  int geometric = 0;
};

/// Real-spectrum summary of a general (possibly nonsymmetric) real matrix.
/// Values are strictly decreasing after clustering; eigenvalues closer than
/// tol * max(1, ||C||_F) are merged into their mean with summed multiplicity.
struct Spectrum {
  std::vector<RealEig> real_eigs;
  bool has_complex = false;

  int total_real_multiplicity() const;
};

Spectrum real_spectrum(const Matrix& c, double tol = kTol);

/// Numerical rank: number of singular values above tol * sigma_max.
int rank(const Matrix& m, double tol = kRankTol);

/// Orthonormal basis of the (right) nullspace; n x d with d = n - rank.
Matrix nullspace_basis(const Matrix& m, double tol = kRankTol);

/// Solution set of M x = v for symmetric M. When v lies in range(M) within
/// tol, `particular` is the minimum-norm solution and `nullspace` spans
/// ker(M); otherwise consistent is false.
struct AffineSolutionSet {
  Vector particular;
  Matrix nullspace;
  bool consistent = false;
};

AffineSolutionSet solve_consistent(const SymMatrix& m, const Vector& v, double tol = kTol);

/// X with B X = A, computed column-wise by a pivoted factorization.
Matrix solve_matrix(const SymMatrix& b, const SymMatrix& a);

/// Nonsingularity through the lens of the singular-value ratio, with an
/// ambiguity band around tol * sigma_max.
enum class Singularity { nonsingular, singular, ambiguous };

Singularity nonsingular_verdict(const SymMatrix& m, double tol = kTol);

}  // namespace pencil
