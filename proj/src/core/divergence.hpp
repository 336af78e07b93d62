#pragma once

// Divergence quantities on finite matrices: rho_{sigma,alpha,z}, Q_{alpha,z},
// D_{alpha,z}, tilde-D, the sandwiched (z = alpha) and Petz (z = 1) special
// cases, D_max, the Umegaki relative entropy, and Renyi / conditional Renyi
// entropies.
//
// Conventions: natural logarithms throughout; a support violation
// (supp rho not inside supp sigma) yields +infinity rather than an error.

#include <cstdint>
#include <vector>

#include "extended_value.hpp"
#include "operator_core.hpp"

namespace renyi {

// Kronecker product and partial trace over the first (A) factor of a bipartite
// d_A * d_B system; small utilities shared by the conditional entropies, the
// tensor-power checks and the discrimination module.
Mat kron(const Mat& A, const Mat& B);
Mat partial_trace_A(const Mat& rho_AB, int dA, int dB);
Mat partial_trace_B(const Mat& rho_AB, int dA, int dB);

// The weighted operator rho_{sigma,alpha,z} =
// sigma^{(1-alpha)/2z} rho^{alpha/z} sigma^{(1-alpha)/2z}, computed on the
// support of sigma.  `ok` is false exactly when supp rho is not contained in
// supp sigma, in which case `infinity` carries the +inf verdict.
struct WeightedOperator {
  bool ok = false;
  Mat op;                 // valid iff ok
  ExtendedValue infinity; // valid iff !ok
};
WeightedOperator rho_sigma_alpha_z(const Mat& rho, const Mat& sigma,
                                   const AlphaZ& p);

// log Q_{alpha,z}; +inf (support_violation) when supports do not nest.
// Computed by BOTH closed forms -- Tr rho_{sigma,alpha,z}^z and
// ||sigma^{(1-alpha)/2z} rho^{alpha/2z}||_{2z}^{2z} -- whose agreement is
// asserted (throws std::runtime_error on disagreement beyond 1e-7 relative).
// The log form stays finite for very large alpha where Q itself overflows.
ExtendedValue log_q_alpha_z(const Mat& rho, const Mat& sigma, const AlphaZ& p);

// Q_{alpha,z} = exp(log Q).
ExtendedValue q_alpha_z(const Mat& rho, const Mat& sigma, const AlphaZ& p);

// D_{alpha,z} = log Q / (alpha - 1);  tilde-D = D - log(Tr rho)/(alpha - 1).
ExtendedValue d_alpha_z(const Mat& rho, const Mat& sigma, const AlphaZ& p);
ExtendedValue d_tilde(const Mat& rho, const Mat& sigma, const AlphaZ& p);

// Sandwiched (z = alpha) and Petz / standard (z = 1) special cases.
ExtendedValue d_sandwiched(const Mat& rho, const Mat& sigma, double alpha);
ExtendedValue d_petz(const Mat& rho, const Mat& sigma, double alpha);

// Max-relative entropy D_max = log inf{ lambda : rho <= lambda sigma }
// = log ||sigma^{-1/2} rho sigma^{-1/2}||_inf on supp sigma.
ExtendedValue d_max(const Mat& rho, const Mat& sigma);

// Umegaki relative entropy sum_{ij} |<u_i|v_j>|^2 lambda_i (log lambda_i -
// log mu_j) over the supports; +inf on support violation.
ExtendedValue relative_entropy(const Mat& rho, const Mat& sigma);

// Renyi alpha-entropy S_alpha = (1/(1-alpha)) log Tr rho^alpha; internally
// cross-checked against -D_{alpha,z}(rho || I).
double renyi_entropy(const Mat& rho, double alpha);

// Conditional Renyi (alpha,z)-entropies of a bipartite density matrix.
// S_down = -D_{alpha,z}(rho_AB || I_A (x) rho_B) is exact;
// S_up = -inf_{omega_B} D_{alpha,z}(rho_AB || I_A (x) omega_B) is found by
// seeded multistart local search over density matrices omega_B.
double cond_entropy_down(const Mat& rho_AB, int dA, int dB, const AlphaZ& p);

struct CondUpResult {
  double value = 0.0;      // the best S_up found
  Mat omega_B;             // the minimizer achieving it
  double gap_estimate = 0; // spread of the local-search results (0 = robust)
};
CondUpResult cond_entropy_up(const Mat& rho_AB, int dA, int dB,
                             const AlphaZ& p, std::uint64_t seed = 1,
                             int n_starts = 20);

// ||rho_{sigma,alpha,z}||_inf: the smallest lambda with
// rho^{alpha/z} <= lambda sigma^{(alpha-1)/z}; +inf when supports fail.
// A finite value certifies membership in the dominance class.
ExtendedValue lambda_min_dominance(const Mat& rho, const Mat& sigma,
                                   const AlphaZ& p);

// Classical log Q_alpha on nonnegative weight vectors:
// log sum_i p_i^alpha q_i^{1-alpha} (terms with p_i = 0 dropped); +inf when
// some p_i > 0 has q_i = 0.  The commuting-case workhorse shared by the
// truncation ladders and the classical oracles.
ExtendedValue classical_log_q(const std::vector<double>& p,
                              const std::vector<double>& q, double alpha);

}  // namespace renyi
