#pragma once

// The finite-dimensional-approximation program: projection ladders with
// convergence verdicts, Q_fa estimation over projection families, the
// contraction-vs-projection comparison, the alpha -> infinity limit toward
// D_max, and the minimax (inf-max exchange) diagnostic.

#include <vector>

#include "diagonal_model.hpp"
#include "divergence.hpp"

namespace renyi {

enum class Verdict { converged, diverging, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverging: return "diverging";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct LadderReport {
  std::vector<double> levels;          // truncation sizes N or window indices
  std::vector<ExtendedValue> values;   // per-level value (may overflow to +inf)
  std::vector<double> log_values;      // log of each value; immune to overflow
  bool monotone = false;               // non-decreasing within 1e-10 slack
  Verdict verdict = Verdict::inconclusive;
  double limit = 0.0;      // last (or extrapolated) value when converged
  double est_error = 0.0;  // last relative increment / distance to target
};

// Defaults from the module contract.
inline constexpr double kConvTol = 1e-6;
inline constexpr double kDivCap = 1e12;

// Ladder over basis cutoffs N for a pair of diagonal models.  Diagonal pairs
// commute, so the truncated Q is the partial sum of p_n^alpha q_n^(1-alpha)
// for every z; evaluated in log space so divergent examples do not overflow.
LadderReport ladder_models(const DiagonalModel& rho_m,
                           const DiagonalModel& sigma_m, const AlphaZ& p,
                           const std::vector<int>& levels,
                           double conv_tol = kConvTol,
                           double div_cap = kDivCap);

// Ladder over spectral windows (lambda_min(sigma) * 2^-k,
// lambda_max(sigma) * 2^k), k = 1..k_max, for finite matrices; the per-level
// value is Q(P rho P || P sigma P) with P = 1_{(c_k,d_k)}(sigma).
LadderReport ladder_matrices(const Mat& rho, const Mat& sigma, const AlphaZ& p,
                             int k_max = 12, double conv_tol = kConvTol,
                             double div_cap = kDivCap);

// Supremum of Q over a supplied projection family (projections that annihilate
// rho or sigma are skipped).  +inf propagates from compressed support
// violations, realizing the rank-one blow-up construction.
ExtendedValue q_fa_estimate(const Mat& rho, const Mat& sigma, const AlphaZ& p,
                            const std::vector<Mat>& projections);

// Q(K rho K* || K sigma K*) <= Q(P rho P || P sigma P) for a contraction K
// with supp|K| <= P (P defaults to the support projection of |K|); checked
// with 1e-9 relative slack.
bool contraction_vs_projection_check(const Mat& K, const Mat& rho,
                                     const Mat& sigma, const AlphaZ& p);

// tilde-D*_alpha along an increasing alpha grid, with a verdict comparing the
// last value to D_max.  The est_error field holds |last - D_max|.
LadderReport alpha_limit_to_dmax(const Mat& rho, const Mat& sigma,
                                 const std::vector<double>& alpha_grid);
// Diagonal-model variant (the paper's non-trace-class counterexample lives
// here: tilde-D*_alpha may sit at +inf while D_max is finite).
LadderReport alpha_limit_to_dmax(const DiagonalModel& rho_m,
                                 const DiagonalModel& sigma_m,
                                 const std::vector<double>& alpha_grid);

// D_max for a pair of diagonal models: sup_n (log p_n - log q_n), scanned with
// tail-growth detection (+inf when the ratio keeps increasing).
ExtendedValue model_d_max(const DiagonalModel& rho_m,
                          const DiagonalModel& sigma_m, long scan = 100000);

// Sum of the series p_n^alpha q_n^(1-alpha) for diagonal models, as log Q;
// +inf (ladder_divergent) when the partial sums keep growing past the cap.
ExtendedValue model_log_q(const DiagonalModel& rho_m,
                          const DiagonalModel& sigma_m, double alpha,
                          double log_div_cap = 700.0, long max_terms = 1000000);

// inf over a directed family of max over u, versus max over u of inf over the
// family; values[k][i] is the k-th family member evaluated at u_grid[i].
// Returns true when the two orders agree within tol.
bool minimax_exchange_check(const std::vector<std::vector<double>>& values,
                            double tol);

}  // namespace renyi
