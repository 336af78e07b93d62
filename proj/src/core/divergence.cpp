#include "divergence.hpp"

#include <random>

#include "optim.hpp"

namespace renyi {

Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

Mat partial_trace_A(const Mat& rho_AB, int dA, int dB) {
  if (rho_AB.rows() != Eigen::Index(dA) * dB)
    throw std::invalid_argument("partial_trace_A: bad bipartition dims");
  Mat out = Mat::Zero(dB, dB);
  for (int a = 0; a < dA; ++a)
    out += rho_AB.block(a * dB, a * dB, dB, dB);
  return out;
}

Mat partial_trace_B(const Mat& rho_AB, int dA, int dB) {
  if (rho_AB.rows() != Eigen::Index(dA) * dB)
    throw std::invalid_argument("partial_trace_B: bad bipartition dims");
  Mat out = Mat::Zero(dA, dA);
  for (int a = 0; a < dA; ++a)
    for (int ap = 0; ap < dA; ++ap) {
      Cplx s = 0.0;
      for (int b = 0; b < dB; ++b) s += rho_AB(a * dB + b, ap * dB + b);
      out(a, ap) = s;
    }
  return out;
}

namespace {

void check_pair(const Mat& rho, const Mat& sigma) {
  if (rho.rows() != rho.cols() || sigma.rows() != sigma.cols() ||
      rho.rows() != sigma.rows())
    throw std::invalid_argument("divergence: dimension mismatch");
  if (rho.cwiseAbs().maxCoeff() == 0.0 || sigma.cwiseAbs().maxCoeff() == 0.0)
    throw std::invalid_argument("divergence: zero operator");
}

// log of Tr M^z for PSD M given its (clamped) eigenvalues, with 0^z := 0.
double log_trace_power(const Vec& ev, double zz) {
  const double lam_max = ev.size() ? ev.maxCoeff() : 0.0;
  if (lam_max <= 0.0) return -std::numeric_limits<double>::infinity();
  // Keep every strictly positive eigenvalue: a relative cutoff would lose
  // lambda^z mass that is significant for z < 1.
  std::vector<double> logs;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) logs.push_back(zz * std::log(ev(i)));
  return log_sum_exp(logs);
}

}  // namespace

WeightedOperator rho_sigma_alpha_z(const Mat& rho, const Mat& sigma,
                                   const AlphaZ& p) {
  check_pair(rho, sigma);
  WeightedOperator w;
  if (!support_leq(rho, sigma)) {
    w.ok = false;
    w.infinity = ExtendedValue::pos_inf(Reason::support_violation);
    return w;
  }
  Mat s_half = fractional_power(sigma, (1.0 - p.alpha) / (2.0 * p.z));
  Mat r_pow = fractional_power(rho, p.alpha / p.z);
  Mat R = s_half * r_pow * s_half;
  w.ok = true;
  w.op = (R + R.adjoint()) / 2.0;  // kill round-off anti-Hermitian part
  w.infinity = ExtendedValue::finite(0.0);
  return w;
}

ExtendedValue log_q_alpha_z(const Mat& rho, const Mat& sigma, const AlphaZ& p) {
  WeightedOperator w = rho_sigma_alpha_z(rho, sigma, p);
  if (!w.ok) return w.infinity;

  // Primary form: Tr rho_{sigma,alpha,z}^z via the eigenvalues of R.
  SpectralData sd = spectral_decompose(w.op);
  Vec ev = psd_eigenvalues(sd);
  double log_q1 = log_trace_power(ev, p.z);

  // Dual form: ||sigma^{(1-alpha)/2z} rho^{alpha/2z}||_{2z}^{2z} via the
  // singular values of the half-sandwiched factor.
  Mat s_half = fractional_power(sigma, (1.0 - p.alpha) / (2.0 * p.z));
  Mat r_half = fractional_power(rho, p.alpha / (2.0 * p.z));
  Eigen::JacobiSVD<Mat> svd(s_half * r_half);
  const auto& s = svd.singularValues();
  std::vector<double> logs;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 0.0) logs.push_back(2.0 * p.z * std::log(s(i)));
  double log_q2 = log_sum_exp(logs);

  // The two closed forms must agree; a mismatch signals numerical failure.
  // For z < 1 eigenvalues near the rank cutoff enter as lambda^z with O(1)
  // relative noise, so achievable agreement degrades to ~rank_tol^z; the
  // tolerance tracks that floor while staying at 1e-7 relative for z >= 1.
  // For huge z (the alpha -> infinity probes) the absolute error of
  // log Tr M^z = z log lambda grows linearly in z at fixed eigenvalue
  // precision, hence the z-proportional term.
  double tol_rel = 1e-7 + 10.0 * std::pow(kRankTol, std::min(p.z, 1.0));
  double tol = tol_rel * std::max(1.0, std::abs(log_q1)) + 1e-12 * p.z;
  if (!(std::abs(log_q1 - log_q2) <= tol))
    throw std::runtime_error(
        "q_alpha_z: closed-form cross-check failed (log Q = " +
        std::to_string(log_q1) + " vs " + std::to_string(log_q2) + ")");
  return ExtendedValue::finite(log_q1);
}

ExtendedValue q_alpha_z(const Mat& rho, const Mat& sigma, const AlphaZ& p) {
  ExtendedValue lq = log_q_alpha_z(rho, sigma, p);
  if (lq.is_pos_inf()) return lq;
  return ExtendedValue::finite(std::exp(lq.value));
}

ExtendedValue d_alpha_z(const Mat& rho, const Mat& sigma, const AlphaZ& p) {
  ExtendedValue lq = log_q_alpha_z(rho, sigma, p);
  if (lq.is_pos_inf()) return lq;
  return ExtendedValue::finite(lq.value / (p.alpha - 1.0));
}

ExtendedValue d_tilde(const Mat& rho, const Mat& sigma, const AlphaZ& p) {
  ExtendedValue d = d_alpha_z(rho, sigma, p);
  if (d.is_pos_inf()) return d;
  double tr = rho.trace().real();
  return ExtendedValue::finite(d.value - std::log(tr) / (p.alpha - 1.0));
}

ExtendedValue d_sandwiched(const Mat& rho, const Mat& sigma, double alpha) {
  return d_alpha_z(rho, sigma, AlphaZ(alpha, alpha));
}

ExtendedValue d_petz(const Mat& rho, const Mat& sigma, double alpha) {
  return d_alpha_z(rho, sigma, AlphaZ(alpha, 1.0));
}

ExtendedValue d_max(const Mat& rho, const Mat& sigma) {
  check_pair(rho, sigma);
  if (!support_leq(rho, sigma))
    return ExtendedValue::pos_inf(Reason::support_violation);
  Mat s_inv_half = fractional_power(sigma, -0.5);
  Mat M = s_inv_half * rho * s_inv_half;
  SpectralData sd = spectral_decompose((M + M.adjoint()) / 2.0);
  double top = sd.eigenvalues.size() ? sd.eigenvalues(0) : 0.0;
  if (top <= 0.0) return ExtendedValue::neg_inf(Reason::endpoint_convention);
  return ExtendedValue::finite(std::log(top));
}

ExtendedValue relative_entropy(const Mat& rho, const Mat& sigma) {
  check_pair(rho, sigma);
  if (!support_leq(rho, sigma))
    return ExtendedValue::pos_inf(Reason::support_violation);
  SpectralData sr = spectral_decompose(rho);
  SpectralData ss = spectral_decompose(sigma);
  Vec lam = psd_eigenvalues(sr);
  Vec mu = psd_eigenvalues(ss);
  const double lmax = lam.maxCoeff(), mmax = mu.maxCoeff();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) <= kRankTol * lmax) continue;  // log^ 0 := 0 off the support
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
      double ov = std::norm(sr.eigenvectors.col(i).dot(ss.eigenvectors.col(j)));
      if (ov == 0.0) continue;
      if (mu(j) <= kRankTol * mmax) continue;  // overlap ~0 by support nesting
      acc += ov * lam(i) * (std::log(lam(i)) - std::log(mu(j)));
    }
  }
  return ExtendedValue::finite(acc);
}

double renyi_entropy(const Mat& rho, double alpha) {
  if (!(alpha > 1.0))
    throw std::invalid_argument("renyi_entropy: alpha must be > 1");
  check_pair(rho, rho);
  SpectralData sd = spectral_decompose(rho);
  Vec ev = psd_eigenvalues(sd);
  double s_direct = log_trace_power(ev, alpha) / (1.0 - alpha);
  // Cross-check against -D_{alpha,z}(rho || I); the two expressions must agree.
  Mat I = Mat::Identity(rho.rows(), rho.cols());
  double s_div = -d_alpha_z(rho, I, AlphaZ(alpha, alpha)).value;
  if (!(std::abs(s_direct - s_div) <= 1e-10 * std::max(1.0, std::abs(s_direct))))
    throw std::runtime_error("renyi_entropy: cross-check failed");
  return s_direct;
}

double cond_entropy_down(const Mat& rho_AB, int dA, int dB, const AlphaZ& p) {
  Mat rho_B = partial_trace_A(rho_AB, dA, dB);
  Mat ref = kron(Mat::Identity(dA, dA), rho_B);
  return -d_alpha_z(rho_AB, ref, p).value;
}

CondUpResult cond_entropy_up(const Mat& rho_AB, int dA, int dB,
                             const AlphaZ& p, std::uint64_t seed,
                             int n_starts) {
  const Mat I_A = Mat::Identity(dA, dA);
  // omega_B is parametrized through a PSD square root M M^dagger with unit
  // trace normalization; the objective is D_{alpha,z}(rho_AB || I_A (x) omega).
  auto omega_from = [&](const std::vector<double>& x) {
    Mat M(dB, dB);
    for (int i = 0; i < dB; ++i)
      for (int j = 0; j < dB; ++j)
        M(i, j) = Cplx(x[size_t(2 * (i * dB + j))], x[size_t(2 * (i * dB + j) + 1)]);
    Mat W = M * M.adjoint();
    double tr = W.trace().real();
    if (tr <= 1e-12) return Mat(Mat::Identity(dB, dB) / double(dB));
    return Mat(W / tr);
  };
  auto objective = [&](const std::vector<double>& x) {
    Mat ref = kron(I_A, omega_from(x));
    ExtendedValue d = d_alpha_z(rho_AB, ref, p);
    return d.is_finite() ? d.value : 1e30;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const size_t nparam = size_t(2 * dB * dB);

  std::vector<std::vector<double>> starts;
  // Deterministic start at omega_B = rho_B (its PSD square root).
  {
    Mat rho_B = partial_trace_A(rho_AB, dA, dB);
    Mat M = fractional_power(rho_B / rho_B.trace().real(), 0.5);
    std::vector<double> x(nparam);
    for (int i = 0; i < dB; ++i)
      for (int j = 0; j < dB; ++j) {
        x[size_t(2 * (i * dB + j))] = M(i, j).real();
        x[size_t(2 * (i * dB + j) + 1)] = M(i, j).imag();
      }
    starts.push_back(std::move(x));
  }
  for (int s = 0; s < n_starts; ++s) {
    std::vector<double> x(nparam);
    for (auto& v : x) v = gauss(rng);
    starts.push_back(std::move(x));
  }

  double best = std::numeric_limits<double>::infinity();
  double worst_local = -std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  for (const auto& x0 : starts) {
    NelderMeadResult r = nelder_mead(objective, x0, 0.15, 1500, 1e-12);
    if (r.value < best) { best = r.value; best_x = r.x; }
    worst_local = std::max(worst_local, r.value);
  }

  CondUpResult out;
  out.value = -best;  // S_up = -inf_omega D
  out.omega_B = omega_from(best_x);
  out.gap_estimate = worst_local - best;
  return out;
}

ExtendedValue lambda_min_dominance(const Mat& rho, const Mat& sigma,
                                   const AlphaZ& p) {
  WeightedOperator w = rho_sigma_alpha_z(rho, sigma, p);
  if (!w.ok) return w.infinity;
  SpectralData sd = spectral_decompose(w.op);
  Vec ev = psd_eigenvalues(sd);
  return ExtendedValue::finite(ev.size() ? ev.maxCoeff() : 0.0);
}

ExtendedValue classical_log_q(const std::vector<double>& p,
                              const std::vector<double>& q, double alpha) {
  if (p.size() != q.size())
    throw std::invalid_argument("classical_log_q: length mismatch");
  std::vector<double> logs;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0)
      throw std::invalid_argument("classical_log_q: negative weight");
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return ExtendedValue::pos_inf(Reason::support_violation);
    logs.push_back(alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]));
  }
  return ExtendedValue::finite(log_sum_exp(logs));
}

}  // namespace renyi
