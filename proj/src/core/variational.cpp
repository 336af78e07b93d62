#include "variational.hpp"

namespace renyi {

namespace {

// Tr (H^{1/2} A H^{1/2})^s computed as the sum of s-th powers of the squared
// singular values of X = H^{1/2} A^{1/2}; Tr (X X*)^s = sum_i sv_i^{2s}.
double trace_power_via_svd(const Mat& H_half, const Mat& A_half, double s) {
  Eigen::JacobiSVD<Mat> svd(H_half * A_half);
  const auto& sv = svd.singularValues();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 0.0) acc += std::pow(sv(i), 2.0 * s);
  return acc;
}

}  // namespace

double eval_F(const Mat& H, const Mat& rho, const AlphaZ& p) {
  if (H.rows() != rho.rows())
    throw std::invalid_argument("eval_F: dimension mismatch");
  Mat H_half = fractional_power(H, 0.5);
  Mat r_half = fractional_power(rho, p.alpha / (2.0 * p.z));
  return trace_power_via_svd(H_half, r_half, p.z / p.alpha);
}

double eval_G(const Mat& H, const Mat& sigma, const AlphaZ& p) {
  if (H.rows() != sigma.rows())
    throw std::invalid_argument("eval_G: dimension mismatch");
  Mat H_half = fractional_power(H, 0.5);
  Mat s_half = fractional_power(sigma, (p.alpha - 1.0) / (2.0 * p.z));
  return trace_power_via_svd(H_half, s_half, p.z / (p.alpha - 1.0));
}

double q_var_objective(const Mat& H, const Mat& rho, const Mat& sigma,
                       const AlphaZ& p) {
  return p.alpha * eval_F(H, rho, p) + (1.0 - p.alpha) * eval_G(H, sigma, p);
}

double logq_var_objective(const Mat& H, const Mat& rho, const Mat& sigma,
                          const AlphaZ& p) {
  double F = eval_F(H, rho, p);
  double G = eval_G(H, sigma, p);
  if (!(G > kWitnessGFloor))
    throw std::invalid_argument("logq_var_objective: invalid witness (G = 0)");
  if (!(F > 0.0)) return -std::numeric_limits<double>::infinity();
  return p.alpha * std::log(F) + (1.0 - p.alpha) * std::log(G);
}

VariationalWitness make_witness(const Mat& H, const Mat& rho, const Mat& sigma,
                                const AlphaZ& p) {
  VariationalWitness w;
  w.H = H;
  w.F_value = eval_F(H, rho, p);
  w.G_value = eval_G(H, sigma, p);
  w.objective_Q = p.alpha * w.F_value + (1.0 - p.alpha) * w.G_value;
  w.objective_logQ =
      (w.F_value > 0.0 && w.G_value > kWitnessGFloor)
          ? p.alpha * std::log(w.F_value) + (1.0 - p.alpha) * std::log(w.G_value)
          : -std::numeric_limits<double>::infinity();
  return w;
}

VariationalWitness optimizer_H(const Mat& rho, const Mat& sigma,
                               const AlphaZ& p, double c, double d) {
  if (!support_leq(rho, sigma))
    throw std::invalid_argument("optimizer_H: support violation");
  Mat P = spectral_truncation(sigma, c, d);
  if (P.cwiseAbs().maxCoeff() == 0.0)
    throw std::invalid_argument("optimizer_H: empty spectral window");
  Mat sigma_n = P * sigma * P;
  Mat s_out = fractional_power(sigma_n, (1.0 - p.alpha) / (2.0 * p.z));
  Mat r_pow = fractional_power(rho, p.alpha / p.z);
  Mat inner = s_out * r_pow * s_out;
  inner = (inner + inner.adjoint()) / 2.0;
  Mat H = s_out * fractional_power(inner, p.alpha - 1.0) * s_out;
  H = (H + H.adjoint()) / 2.0;
  // Evaluate F and G through the factor W with H = W W^*: the singular values
  // of H^{1/2} M equal those of W^* M, which sidesteps the loss of precision
  // in re-extracting H^{1/2} from the ill-conditioned assembled H.
  Mat W = s_out * fractional_power(inner, (p.alpha - 1.0) / 2.0);
  Mat r_half = fractional_power(rho, p.alpha / (2.0 * p.z));
  Mat g_half = fractional_power(sigma, (p.alpha - 1.0) / (2.0 * p.z));
  VariationalWitness w;
  w.H = H;
  w.F_value = trace_power_via_svd(Mat(W.adjoint()), r_half, p.z / p.alpha);
  w.G_value =
      trace_power_via_svd(Mat(W.adjoint()), g_half, p.z / (p.alpha - 1.0));
  w.objective_Q = p.alpha * w.F_value + (1.0 - p.alpha) * w.G_value;
  w.objective_logQ =
      (w.F_value > 0.0 && w.G_value > kWitnessGFloor)
          ? p.alpha * std::log(w.F_value) +
                (1.0 - p.alpha) * std::log(w.G_value)
          : -std::numeric_limits<double>::infinity();
  return w;
}

VariationalWitness optimizer_H_full(const Mat& rho, const Mat& sigma,
                                    const AlphaZ& p) {
  SpectralData sd = spectral_decompose(sigma);
  Vec mu = psd_eigenvalues(sd);
  double top = mu.maxCoeff();
  double lo = top;
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (mu(i) > kRankTol * top) lo = std::min(lo, mu(i));
  return optimizer_H(rho, sigma, p, lo / 2.0, top * 2.0);
}

VarCertificate var_certificate(const Mat& rho, const Mat& sigma,
                               const AlphaZ& p,
                               const std::vector<Mat>& witnesses) {
  VarCertificate cert;
  cert.best_objective = -std::numeric_limits<double>::infinity();
  for (const Mat& H : witnesses)
    cert.best_objective =
        std::max(cert.best_objective, q_var_objective(H, rho, sigma, p));
  ExtendedValue q = q_alpha_z(rho, sigma, p);
  cert.q = q.value;
  if (q.is_finite() && std::isfinite(cert.best_objective)) {
    cert.gap_rel = std::abs(cert.q - cert.best_objective) / cert.q;
    cert.certified = cert.gap_rel < 1e-6;
  } else {
    cert.gap_rel = std::numeric_limits<double>::infinity();
    cert.certified = false;
  }
  return cert;
}

}  // namespace renyi
