#pragma once

// Variational representations of Q and log Q: the functionals F and G, the
// two objectives, the explicit optimizer built from spectral truncations of
// sigma, and supremum certificates over witness families.
//
// F(H) = Tr (H^{1/2} rho^{alpha/z} H^{1/2})^{z/alpha}
// G(H) = Tr (H^{1/2} sigma^{(alpha-1)/z} H^{1/2})^{z/(alpha-1)}
// Q = sup_H { alpha F(H) + (1-alpha) G(H) },
// log Q = sup_{H : G(H) > 0} { alpha log F(H) + (1-alpha) log G(H) }.

#include <vector>

#include "divergence.hpp"

namespace renyi {

struct VariationalWitness {
  Mat H;  // PSD witness
  double F_value = 0.0;
  double G_value = 0.0;
  double objective_Q = 0.0;     // alpha F + (1 - alpha) G
  double objective_logQ = 0.0;  // alpha log F + (1 - alpha) log G
};

// Witnesses with G below this threshold are inadmissible for the log form.
inline constexpr double kWitnessGFloor = 1e-300;

// F and G evaluated through the singular values of H^{1/2} rho^{alpha/2z}
// (resp. H^{1/2} sigma^{(alpha-1)/2z}) for numerical stability.
double eval_F(const Mat& H, const Mat& rho, const AlphaZ& p);
double eval_G(const Mat& H, const Mat& sigma, const AlphaZ& p);

double q_var_objective(const Mat& H, const Mat& rho, const Mat& sigma,
                       const AlphaZ& p);
// Throws std::invalid_argument ("invalid witness") when G(H) <= 1e-300.
double logq_var_objective(const Mat& H, const Mat& rho, const Mat& sigma,
                          const AlphaZ& p);

// The explicit optimizer attached to the spectral window (c, d) of sigma:
// H = sigma_n^{(1-alpha)/2z} (sigma_n^{(1-alpha)/2z} rho^{alpha/z}
//     sigma_n^{(1-alpha)/2z})^{alpha-1} sigma_n^{(1-alpha)/2z},
// where sigma_n = P sigma P with P = 1_{(c,d)}(sigma).  Saturates
// F(H) = G(H) = Tr (P rho_{sigma,alpha,z} P)^z; with the full window in
// finite dimension the objective equals Q.  Throws on support violation.
VariationalWitness optimizer_H(const Mat& rho, const Mat& sigma,
                               const AlphaZ& p, double c, double d);
// Convenience: the full window (whole spectrum of sigma).
VariationalWitness optimizer_H_full(const Mat& rho, const Mat& sigma,
                                    const AlphaZ& p);

// Fill in F, G and both objectives for a given witness H.
VariationalWitness make_witness(const Mat& H, const Mat& rho, const Mat& sigma,
                                const AlphaZ& p);

struct VarCertificate {
  double best_objective = 0.0;  // max of alpha F + (1-alpha) G over witnesses
  double q = 0.0;               // closed-form Q (may be +inf)
  double gap_rel = 0.0;         // |Q - best| / Q
  bool certified = false;       // gap_rel < 1e-6
};
VarCertificate var_certificate(const Mat& rho, const Mat& sigma,
                               const AlphaZ& p,
                               const std::vector<Mat>& witnesses);

}  // namespace renyi
