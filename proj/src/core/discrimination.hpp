#pragma once

// Operational layer: generalized type I/II quantities, exact classical
// Neyman-Pearson sweeps and strong-converse-exponent estimation, measured
// Renyi divergences over POVMs, two-outcome D_max tests, Kraus channels and
// data-processing checks.

#include <cstdint>
#include <utility>
#include <vector>

#include "divergence.hpp"
#include "truncation.hpp"

namespace renyi {

// A quantum channel in Kraus form; sum_i V_i^* V_i = I (Heisenberg-unital).
// apply() is the Heisenberg map Phi(A) = sum_i V_i^* A V_i; dual_apply() is
// the Schrodinger map Phi*(rho) = sum_i V_i rho V_i^*.
struct Channel {
  std::vector<Mat> kraus;
  void validate(double tol = 1e-10) const;
  Mat apply(const Mat& A) const;
  Mat dual_apply(const Mat& rho) const;
};

// Haar-random Kraus channel via QR of Gaussian matrices, seed-controlled.
Channel random_channel(int d_in, int d_out, int n_kraus, std::uint64_t seed);

// Finite-outcome POVM: PSD effects summing to the identity.
struct Povm {
  std::vector<Mat> effects;
  void validate(double tol = 1e-10) const;
};

// Weight pair on a finite alphabet (not necessarily normalized).
struct ClassicalPair {
  std::vector<double> p, q;
  bool normalized(double tol = 1e-12) const;
};

// Generalized type I success and type II error of a test 0 <= T <= I:
// gamma = Tr T^{1/2} rho T^{1/2}, beta = Tr T^{1/2} sigma T^{1/2}.
std::pair<double, double> generalized_errors(const Mat& T, const Mat& rho,
                                             const Mat& sigma);

// Classical Renyi divergence (1/(alpha-1)) log sum p^alpha q^(1-alpha);
// +inf on support violation.
ExtendedValue classical_divergence(const ClassicalPair& pair, double alpha);

// Classical divergence of the POVM outcome distributions (Tr rho M_i),
// (Tr sigma M_i); never exceeds the sandwiched divergence (DPI).
double measured_renyi(const Mat& rho, const Mat& sigma, const Povm& povm,
                      double alpha);

// Best (1/n) measured divergence on n copies (n <= 3, total dim <= 4096)
// over a searched PVM family: product eigenbases of rho, sigma, rho + sigma,
// the sigma-pinching basis, and seeded random PVMs.
struct MeasuredBound {
  double best = 0.0;  // best (1/n) D_alpha^meas found
  double gap = 0.0;   // D*_alpha - best (>= 0 up to tolerance)
};
MeasuredBound measured_lower_bound(const Mat& rho, const Mat& sigma,
                                   double alpha, int n,
                                   std::uint64_t seed = 1);

// Two-outcome realization of D_max = log sup_T Tr rho T / Tr sigma T: the
// rank-one test along the top generalized eigenvector plus random refinement.
ExtendedValue dmax_two_outcome(const Mat& rho, const Mat& sigma,
                               std::uint64_t seed = 1);

// Optimal randomized Neyman-Pearson test for n i.i.d. copies at type II rate
// r (beta <= e^{-n r}): maximal type I success gamma_n.  Exact for m = 2 via
// the binomial type lattice; quantized-LLR direct convolution for m > 2
// (bucket width 1e-4 nats).
struct NpResult {
  double best_gamma = 0.0;
  double achieved_beta = 0.0;
  // Log-domain copies that stay meaningful when gamma underflows (e.g.
  // gamma ~ e^{-1000} at large block lengths).
  double log_gamma = 0.0;
  double log_beta = 0.0;
};
NpResult np_sweep(const ClassicalPair& pair, int n, double r);

// -(1/n) log gamma_n along n_grid with Richardson-style extrapolation in the
// `limit` field; compare against the Hoeffding anti-divergence H^_r.
LadderReport sc_exponent_estimate(const ClassicalPair& pair, double r,
                                  const std::vector<int>& n_grid);

// Schrodinger-picture action of a channel on a PSD operator.
Mat apply_channel(const Channel& ch, const Mat& A);

// True iff D*_alpha(Phi*(rho) || Phi*(sigma)) <= D*_alpha(rho || sigma)+1e-8.
bool dpi_check(const Channel& ch, const Mat& rho, const Mat& sigma,
               double alpha);

}  // namespace renyi
