#pragma once

// Spectral calculus for finite Hermitian matrices: decompositions, fractional
// powers on the support, support projections, spectral truncations, Schatten
// (quasi-)norms and compressions by contractions.
//
// All fractional powers follow the support convention 0^p := 0 (including
// negative p, which inverts only on the support).  Eigenvalues at or below
// rank_tol * lambda_max are treated as exact zeros.

#include <Eigen/Dense>

#include "extended_value.hpp"

namespace renyi {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using Cplx = std::complex<double>;

// Relative eigenvalue cutoff separating the support from numerical noise.
inline constexpr double kRankTol = 1e-10;
// Default tolerance for support-inclusion tests.
inline constexpr double kSupportTol = 1e-8;

struct SpectralData {
  Vec eigenvalues;   // descending
  Mat eigenvectors;  // orthonormal columns matching eigenvalues
  int effective_rank = 0;  // eigenvalues > rank_tol * |lambda|_max
};

// Hermiticity check relative to the largest absolute entry.
bool is_hermitian(const Mat& A, double tol = 1e-12);

// Deterministic eigendecomposition: eigenvalues descending, degenerate
// clusters resolved by Gram-Schmidt against the standard basis in
// lexicographic order, phases fixed so the first significant entry of each
// eigenvector is real positive.  Throws std::invalid_argument on
// non-Hermitian input.
SpectralData spectral_decompose(const Mat& A, double rank_tol = kRankTol);

// Clamp tiny negative eigenvalues of a nominally PSD matrix to zero; throws
// std::invalid_argument if an eigenvalue is below -rank_tol * lambda_max
// (genuine indefiniteness rather than round-off).
Vec psd_eigenvalues(const SpectralData& sd, double rank_tol = kRankTol);

// A^p with f(lambda) = lambda^p on the effective support, 0 off it.
// A^0 is the support projection.
Mat fractional_power(const Mat& A, double p, double rank_tol = kRankTol);
Mat fractional_power(const SpectralData& sd, double p,
                     double rank_tol = kRankTol);

// Projection onto the effective support of a PSD matrix.
Mat support_projection(const Mat& A, double rank_tol = kRankTol);

// True iff supp(A) <= supp(B), i.e. ||(I - B^0) A^0||_inf <= tol.
bool support_leq(const Mat& A, const Mat& B, double tol = kSupportTol);

// Spectral projection 1_{(c,d)}(sigma).  An empty window yields the zero
// projection (allowed; callers may inspect the rank).
Mat spectral_truncation(const Mat& sigma, double c, double d,
                        double rank_tol = kRankTol);

// Schatten p-(quasi-)norm (sum of s_i^p)^{1/p} over singular values above
// rank_tol * s_max; valid for every p > 0.
double schatten_norm(const Mat& X, double p, double rank_tol = kRankTol);

// K A K^* for a contraction K (||K||_inf <= 1, checked to 1e-8).  Throws
// std::invalid_argument when K is not a contraction.
Mat compress(const Mat& K, const Mat& A);

// log(sum_i exp(x_i)); -inf for an empty list.  Used to evaluate traces of
// large matrix powers without overflow.
double log_sum_exp(const std::vector<double>& xs);

}  // namespace renyi
