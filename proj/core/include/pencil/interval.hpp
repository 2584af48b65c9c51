#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pencil/sdc.hpp"

namespace pencil {

enum class IntervalKind { empty, point, closed, left_ray, right_ray, all_reals };

const char* to_string(IntervalKind k);

/// A convex subset of the reals: empty, a single point, a closed bounded
/// interval, a closed half-line, or the whole line.
class MuInterval {
 public:
  MuInterval() = default;

  static MuInterval empty();
  static MuInterval point(double mu);
  static MuInterval closed(double lo, double hi);
  static MuInterval left_ray(double hi);    // (-inf, hi]
  static MuInterval right_ray(double lo);   // [lo, +inf)
  static MuInterval all_reals();

  IntervalKind kind() const { return kind_; }
  bool is_empty() const { return kind_ == IntervalKind::empty; }
  bool has_lo() const;
  bool has_hi() const;
  double lo() const;  // requires has_lo()
  double hi() const;  // requires has_hi()

  /// Closed membership.
  bool contains(double mu) const;
  /// Membership in the interior.
  bool strictly_inside(double mu) const;
  /// More than one point.
  bool is_multi_point() const;

  MuInterval interior() const;           // empty / point collapse to empty
  MuInterval intersect_nonneg() const;   // intersection with [0, +inf)
  std::vector<double> finite_endpoints() const;

  /// Frozen text rendering, e.g. "[-1, +inf)", "{2}", "{} (empty)".
  std::string text(bool open = false) const;

  bool operator==(const MuInterval& o) const;

 private:
  IntervalKind kind_ = IntervalKind::empty;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

enum class IntervalPath { sdc_nonsingular, sdc_singular_reduced, nonsdc_candidates, degenerate };

const char* to_string(IntervalPath p);

enum class BlockInertia { PD, ND, indefinite };

const char* to_string(BlockInertia b);

/// One eigenvalue block of the diagonalized pencil: the pencil restricted to
/// the lambda-eigenspace is (lambda + mu) * B_block.
struct BlockClass {
  double lambda = 0.0;
  int mult = 0;
  BlockInertia inertia = BlockInertia::indefinite;
};

/// Result of a positive-semidefinite interval computation.
struct IntervalReport {
  MuInterval interval;       // { mu : A + mu B >= 0 }
  MuInterval pd_interval;    // open interior where the pencil is positive definite
  bool pd_open = true;
  /// When both matrices are singular with trailing zero coordinates the full
  /// pencil is never definite; pd_interval then refers to the reduced pair.
  bool pd_of_reduced_pair = false;
  IntervalPath path = IntervalPath::degenerate;
  std::vector<std::string> notes;
  std::optional<std::vector<BlockClass>> block_classification;
  std::optional<std::pair<SymMatrix, SymMatrix>> reduced_pair;

  std::string path_string() const;  // path plus notes joined with '|'
};

IntervalReport psd_interval(const SymMatrix& a, const SymMatrix& b, double tol = kTol);

/// Intersection over coordinates of { mu : alpha_i + mu beta_i >= 0 }.
/// Endpoints closer than merge_tol * (1 + |lo| + |hi|) collapse to a point.
MuInterval interval_from_diagonal(const Vector& alpha, const Vector& beta,
                                  double merge_tol = 0.0);

/// Open interval where the pencil (or, for doubly singular pairs, the reduced
/// pencil) is positive definite.
MuInterval pd_interval(const SymMatrix& a, const SymMatrix& b, double tol = kTol);

/// One candidate multiplier for a non-SDC pair, with its origin.
struct MuCandidate {
  double mu = 0.0;
  std::string provenance;
};

/// Finite candidate list for non-SDC pairs with at least one nonsingular
/// member: {0 if A >= 0} plus the negated (or negated-reciprocal) real
/// eigenvalues of the associated similarity, deduplicated.
std::vector<MuCandidate> nonsdc_candidates(const SymMatrix& a, const SymMatrix& b,
                                           double tol = kTol);

}  // namespace pencil
