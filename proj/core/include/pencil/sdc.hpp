#pragma once

#include <optional>

#include "pencil/linalg.hpp"

namespace pencil {

enum class SdcObstruction {
  complex_eigenvalue,
  defective_real_eigenvalue,
  offdiag_coupling_A2,
};

const char* to_string(SdcObstruction o);

/// Verdict on simultaneous diagonalizability via congruence. When `sdc`,
/// `congruence` P is nonsingular with P^T A P = diag(alpha) and
/// P^T B P = diag(beta); otherwise `obstruction` names the witness.
struct SdcReport {
  bool sdc = false;
  Matrix congruence;
  Vector alpha;
  Vector beta;
  std::optional<SdcObstruction> obstruction;
};

SdcReport is_sdc(const SymMatrix& a, const SymMatrix& b, double tol = kTol);

/// Congruence P with both P^T A P and P^T B P diagonal. Columns are unit
/// length with deterministic sign, ordered by descending alpha/beta ratio
/// (beta = 0 coordinates last, sorted by descending alpha). Near-zero
/// diagonal entries are snapped to exactly zero.
struct Diagonalization {
  Matrix P;
  Vector alpha;
  Vector beta;
};

Diagonalization simultaneous_diagonalize(const SymMatrix& a, const SymMatrix& b,
                                         double tol = kTol);

enum class SingularFormTag { form_a1, form_a3 };

/// Canonical congruence form for a pair with singular B:
///   U^T B U = diag(B1, 0),  B1 nonsingular diagonal p x p,
/// and U^T A U in one of two block layouts:
///   form_a1 (s = 0):  [ A1  A2 ; A2^T 0 ]
///   form_a3 (s > 0):  [ A1 0 A2 ; 0 A3 0 ; A2^T 0 0 ],  A3 nonsingular diagonal s x s.
/// A2 is p x (r - s) and may have zero columns (absent).
struct SingularPairForm {
  Matrix U;
  int p = 0;
  int r = 0;
  int s = 0;
  Vector B1;  // diagonal entries, length p
  Matrix A1;  // p x p symmetric
  Matrix A2;  // p x (r - s)
  Vector A3;  // diagonal entries, length s
  SingularFormTag tag = SingularFormTag::form_a1;

  bool a2_absent() const { return A2.cols() == 0; }
  bool a2_zero(double tol, double scale) const;
};

SingularPairForm singular_pair_canonical(const SymMatrix& a, const SymMatrix& b,
                                         double tol = kTol);

}  // namespace pencil
