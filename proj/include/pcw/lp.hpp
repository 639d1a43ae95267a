#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pcw/ring.hpp"

namespace pcw {

/// Cone constraint matrix K: one row per (check j, support position l),
/// with +1 at the other support columns of row j, -1 at column l. A row
/// encodes sum_{i in I_j \ {l}} x_i >= x_l.
struct ConeMatrix {
  int n = 0;
  int rows = 0;
  std::vector<std::int8_t> entries;             // row-major rows*n
  std::vector<std::pair<int, int>> row_labels;  // (j, l), 0-based

  std::int8_t at(int r, int i) const {
    return entries[static_cast<std::size_t>(r) * n + i];
  }
};

/// Rows ordered by j ascending, then l ascending within the support.
/// Weight-1 parity rows collapse the cone to x_l <= 0 and are rejected
/// (HypothesesUnmetError). Requires unit entries.
ConeMatrix build_cone_matrix(const ParityCheckMatrix& H);

/// max sum_i y_(i,i) over the polytope: y >= 0, total mass 1, and every
/// row slice y_(i,:) and column slice y_(:,i) inside the cone K x >= 0.
/// Variables are indexed row-major: y[(i,i')] = y[i*n + i'].
struct LpInstance {
  int n = 0;
  ConeMatrix cone;

  int num_vars() const { return n * n; }
};

LpInstance build_lp(const ParityCheckMatrix& H);

enum class LpStatus { Optimal, Infeasible, NumericFailure };

struct LpSolution {
  LpStatus status = LpStatus::NumericFailure;
  double objective = 0.0;
  std::vector<double> y;
  long iterations = 0;
};

inline constexpr double kDefaultLpTol = 1e-9;

/// Two-phase dense tableau simplex with Bland's anti-cycling rule.
/// Deterministic: identical instances yield identical solutions. The
/// returned point is re-verified against the raw constraints; residuals
/// above tol give LpStatus::NumericFailure. Iteration cap:
/// 50 * (variables + constraint rows).
LpSolution solve_lp(const LpInstance& inst, double tol = kDefaultLpTol);

struct LpFeasibility {
  bool feasible = false;
  double max_violation = 0.0;
};

/// Checks y against the raw constraint list (mass, nonnegativity, cone
/// slices), independently of any solver state.
LpFeasibility check_lp_point(const LpInstance& inst,
                             const std::vector<double>& y, double tol);

struct LpBoundReport {
  LpSolution solution;
  double optimum = 0.0;  // max sum_i y_(i,i)
  double kappa_used = 0.0;
  double kappa_generic_value = 0.0;
  double bound = 0.0;          // kappa / optimum
  double bound_generic = 0.0;  // generic-constant value, for comparison
  std::uint32_t q = 2;
  int n = 0;
};

/// LP lower bound kappa(q) / max f' on the squared minimum pseudodistance.
/// Throws HypothesesUnmetError for invalid/degenerate H and
/// std::runtime_error on solver failure.
LpBoundReport lp_pseudodistance_bound(const ParityCheckMatrix& H,
                                      double tol = kDefaultLpTol);

/// CPLEX-style LP text (Maximize / Subject To / Bounds / End), suitable for
/// cross-checking with external solvers.
void export_lp(const LpInstance& inst, std::ostream& out);

}  // namespace pcw
