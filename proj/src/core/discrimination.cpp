#include "discrimination.hpp"

#include "hoeffding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace renyi {

namespace {

double logaddexp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

void Channel::validate(double tol) const {
  if (kraus.empty()) throw std::invalid_argument("Channel: no Kraus operators");
  const Eigen::Index d_in = kraus[0].cols();
  Mat acc = Mat::Zero(d_in, d_in);
  for (const Mat& V : kraus) {
    if (V.cols() != d_in)
      throw std::invalid_argument("Channel: inconsistent input dimensions");
    acc += V.adjoint() * V;
  }
  if ((acc - Mat::Identity(d_in, d_in)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("Channel: sum V_i^* V_i != I");
}

Mat Channel::apply(const Mat& A) const {
  Mat out = Mat::Zero(kraus[0].cols(), kraus[0].cols());
  for (const Mat& V : kraus) out += V.adjoint() * A * V;
  return out;
}

Mat Channel::dual_apply(const Mat& rho) const {
  Mat out = Mat::Zero(kraus[0].rows(), kraus[0].rows());
  for (const Mat& V : kraus) out += V * rho * V.adjoint();
  return out;
}

Channel random_channel(int d_in, int d_out, int n_kraus, std::uint64_t seed) {
  if (d_out * n_kraus < d_in)
    throw std::invalid_argument("random_channel: d_out * n_kraus < d_in");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat G(d_out * n_kraus, d_in);
  for (Eigen::Index i = 0; i < G.rows(); ++i)
    for (Eigen::Index j = 0; j < G.cols(); ++j)
      G(i, j) = Cplx(gauss(rng), gauss(rng));
  // QR of a Gaussian matrix yields a Haar-random isometry in its Q factor.
  Eigen::HouseholderQR<Mat> qr(G);
  Mat Q = Mat(qr.householderQ()) .leftCols(d_in);
  Channel ch;
  for (int k = 0; k < n_kraus; ++k)
    ch.kraus.push_back(Q.block(k * d_out, 0, d_out, d_in));
  ch.validate();
  return ch;
}

void Povm::validate(double tol) const {
  if (effects.empty()) throw std::invalid_argument("Povm: no effects");
  const Eigen::Index d = effects[0].rows();
  Mat acc = Mat::Zero(d, d);
  for (const Mat& M : effects) {
    SpectralData sd = spectral_decompose(M);
    psd_eigenvalues(sd);  // throws if genuinely indefinite
    acc += M;
  }
  if ((acc - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("Povm: effects do not sum to the identity");
}

bool ClassicalPair::normalized(double tol) const {
  double sp = std::accumulate(p.begin(), p.end(), 0.0);
  double sq = std::accumulate(q.begin(), q.end(), 0.0);
  return std::abs(sp - 1.0) <= tol && std::abs(sq - 1.0) <= tol;
}

std::pair<double, double> generalized_errors(const Mat& T, const Mat& rho,
                                             const Mat& sigma) {
  Mat T_half = fractional_power(T, 0.5);
  double gamma = (T_half * rho * T_half).trace().real();
  double beta = (T_half * sigma * T_half).trace().real();
  return {gamma, beta};
}

ExtendedValue classical_divergence(const ClassicalPair& pair, double alpha) {
  if (!(alpha > 1.0))
    throw std::invalid_argument("classical_divergence: alpha must be > 1");
  ExtendedValue lq = classical_log_q(pair.p, pair.q, alpha);
  if (lq.is_pos_inf()) return lq;
  return ExtendedValue::finite(lq.value / (alpha - 1.0));
}

double measured_renyi(const Mat& rho, const Mat& sigma, const Povm& povm,
                      double alpha) {
  povm.validate();
  ClassicalPair out;
  for (const Mat& M : povm.effects) {
    out.p.push_back(std::max(0.0, (rho * M).trace().real()));
    out.q.push_back(std::max(0.0, (sigma * M).trace().real()));
  }
  return classical_divergence(out, alpha).value;
}

namespace {

// Rank-one PVM from an orthonormal eigenbasis.
Povm pvm_from_basis(const Mat& U) {
  Povm pv;
  for (Eigen::Index j = 0; j < U.cols(); ++j)
    pv.effects.push_back(U.col(j) * U.col(j).adjoint());
  return pv;
}

Mat random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = Cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat> qr(G);
  return Mat(qr.householderQ());
}

}  // namespace

MeasuredBound measured_lower_bound(const Mat& rho, const Mat& sigma,
                                   double alpha, int n, std::uint64_t seed) {
  if (n < 1 || std::pow(double(rho.rows()), double(n)) > 4096.0)
    throw std::invalid_argument("measured_lower_bound: copy count too large");
  double target = d_sandwiched(rho, sigma, alpha).value;
  std::mt19937_64 rng(seed);

  // The reported value is the best per-copy rate over all copy counts k <= n,
  // so the best-gap sequence is non-increasing in n by construction.
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n; ++k) {
    Mat rk = kron_power(rho, k);
    Mat sk = kron_power(sigma, k);
    std::vector<Mat> bases;
    // Product eigenbases of rho, sigma, rho + sigma.
    for (const Mat* single : {&rho, &sigma}) {
      Mat U = spectral_decompose(*single).eigenvectors;
      bases.push_back(kron_power(U, k));
    }
    bases.push_back(kron_power(
        spectral_decompose(Mat(rho + sigma)).eigenvectors, k));
    // Collective bases: eigenbasis of sigma_k-pinched rho_k and of the
    // generalized-eigenvalue matrix sigma^{-1/2} rho sigma^{-1/2} on k copies.
    bases.push_back(spectral_decompose(Mat(rk + sk)).eigenvectors);
    {
      Mat s_inv_half = fractional_power(sk, -0.5);
      Mat M = s_inv_half * rk * s_inv_half;
      bases.push_back(spectral_decompose(Mat((M + M.adjoint()) / 2.0))
                          .eigenvectors);
    }
    // Seeded random PVMs.
    for (int t = 0; t < 8; ++t)
      bases.push_back(random_unitary(int(rk.rows()), rng));

    for (const Mat& U : bases) {
      double v = measured_renyi(rk, sk, pvm_from_basis(U), alpha) / double(k);
      best = std::max(best, v);
    }
  }
  MeasuredBound out;
  out.best = best;
  out.gap = target - best;
  return out;
}

ExtendedValue dmax_two_outcome(const Mat& rho, const Mat& sigma,
                               std::uint64_t seed) {
  if (!support_leq(rho, sigma))
    return ExtendedValue::pos_inf(Reason::support_violation);
  Mat s_inv_half = fractional_power(sigma, -0.5);
  Mat M = s_inv_half * rho * s_inv_half;
  SpectralData sd = spectral_decompose(Mat((M + M.adjoint()) / 2.0));
  // Pull the top generalized eigenvector back through sigma^{-1/2}.
  Eigen::VectorXcd psi = s_inv_half * sd.eigenvectors.col(0);
  double nrm = psi.norm();
  if (nrm == 0.0) return ExtendedValue::finite(-std::numeric_limits<double>::infinity());
  psi /= nrm;
  auto ratio = [&](const Eigen::VectorXcd& v) {
    double num = (v.adjoint() * rho * v)(0).real();
    double den = (v.adjoint() * sigma * v)(0).real();
    return den > 0.0 ? num / den : 0.0;
  };
  double best = ratio(psi);
  // Random refinement around the candidate direction.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    Eigen::VectorXcd pert(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      pert(i) = Cplx(gauss(rng), gauss(rng));
    Eigen::VectorXcd v = psi + 1e-3 * pert;
    v /= v.norm();
    best = std::max(best, ratio(v));
  }
  return ExtendedValue::finite(std::log(best));
}

namespace {

struct LlrClass {
  double llr;       // per-block log-likelihood ratio
  double log_p;     // log of the p-mass of the class
  double log_q;     // log of the q-mass of the class
};

// Optimal randomized NP test over LLR classes sorted descending: accept whole
// classes while the type II budget lasts, randomize on the boundary class.
// All mass arithmetic in the log domain so gamma ~ e^{-1000} stays exact.
NpResult np_from_classes(std::vector<LlrClass> classes, double log_beta_budget) {
  std::sort(classes.begin(), classes.end(),
            [](const LlrClass& a, const LlrClass& b) { return a.llr > b.llr; });
  double log_gamma = -std::numeric_limits<double>::infinity();
  double log_beta = -std::numeric_limits<double>::infinity();
  for (const LlrClass& c : classes) {
    if (std::isinf(c.log_p) && c.log_p < 0) continue;
    if (std::isinf(c.llr) && c.llr > 0) {
      // q-mass zero: accepting is free.
      log_gamma = logaddexp(log_gamma, c.log_p);
      continue;
    }
    double log_beta_next = logaddexp(log_beta, c.log_q);
    if (log_beta_next <= log_beta_budget) {
      log_beta = log_beta_next;
      log_gamma = logaddexp(log_gamma, c.log_p);
    } else {
      // Remaining budget B - beta, as a log; accept that fraction of the class.
      double log_rem;
      if (std::isinf(log_beta) && log_beta < 0) {
        log_rem = log_beta_budget;
      } else {
        double x = log_beta - log_beta_budget;  // <= 0
        double one_minus = -std::expm1(x);      // 1 - e^x
        if (one_minus <= 0.0) break;            // budget exhausted exactly
        log_rem = log_beta_budget + std::log(one_minus);
      }
      double log_frac = log_rem - c.log_q;  // in (-inf, 0]
      if (log_frac > 0.0) log_frac = 0.0;
      log_gamma = logaddexp(log_gamma, c.log_p + log_frac);
      log_beta = log_beta_budget;
      break;
    }
  }
  NpResult res;
  res.best_gamma = std::exp(log_gamma);
  res.achieved_beta = std::exp(log_beta);
  res.log_gamma = log_gamma;
  res.log_beta = log_beta;
  return res;
}

// Exact m = 2 engine on the binomial type lattice.
NpResult np_sweep_binary(const ClassicalPair& pair, int n, double r) {
  const double p0 = pair.p[0], p1 = pair.p[1];
  const double q0 = pair.q[0], q1 = pair.q[1];
  auto lg = [](double x) {
    return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
  };
  std::vector<LlrClass> classes;
  classes.reserve(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) {
    double lbin = std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
                  std::lgamma(double(n - k) + 1.0);
    LlrClass c;
    c.log_p = lbin + double(k) * lg(p1) + double(n - k) * lg(p0);
    c.log_q = lbin + double(k) * lg(q1) + double(n - k) * lg(q0);
    c.llr = c.log_p - c.log_q;  // = k log(p1/q1) + (n-k) log(p0/q0)
    classes.push_back(c);
  }
  return np_from_classes(std::move(classes), -double(n) * r);
}

// Quantized-LLR direct convolution for m > 2; bucket width 1e-4 nats.
NpResult np_sweep_quantized(const ClassicalPair& pair, int n, double r) {
  constexpr double kBucket = 1e-4;
  // Single-symbol distribution over LLR buckets (p-mass, q-mass per bucket).
  std::map<long, std::pair<double, double>> d1;
  double free_p = 0.0;  // symbols with q = 0: acceptance is free
  for (size_t i = 0; i < pair.p.size(); ++i) {
    if (pair.p[i] == 0.0 && pair.q[i] == 0.0) continue;
    if (pair.q[i] == 0.0) { free_p += pair.p[i]; continue; }
    double llr = pair.p[i] > 0.0
                     ? std::log(pair.p[i] / pair.q[i])
                     : -std::numeric_limits<double>::infinity();
    long b = std::isinf(llr) ? std::numeric_limits<long>::min() / 4
                             : long(std::llround(llr / kBucket));
    auto& cell = d1[b];
    cell.first += pair.p[i];
    cell.second += pair.q[i];
  }
  // n-fold direct convolution on the bucket lattice.
  std::map<long, std::pair<double, double>> dn = d1;
  for (int copy = 1; copy < n; ++copy) {
    std::map<long, std::pair<double, double>> next;
    for (const auto& [ba, ma] : dn)
      for (const auto& [bb, mb] : d1) {
        auto& cell = next[ba + bb];
        cell.first += ma.first * mb.first;
        cell.second += ma.second * mb.second;
      }
    dn = std::move(next);
  }
  std::vector<LlrClass> classes;
  auto lg = [](double x) {
    return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
  };
  // Symbols with q = 0 appearing anywhere in the block make the test free on
  // that block; fold their total p-mass into one +inf-LLR class.
  double p_all = std::accumulate(pair.p.begin(), pair.p.end(), 0.0);
  double p_with_free = std::pow(p_all, double(n)) -
                       std::pow(p_all - free_p, double(n));
  if (p_with_free > 0.0) {
    LlrClass c;
    c.llr = std::numeric_limits<double>::infinity();
    c.log_p = lg(p_with_free);
    c.log_q = -std::numeric_limits<double>::infinity();
    classes.push_back(c);
  }
  for (const auto& [b, mass] : dn) {
    LlrClass c;
    c.llr = double(b) * kBucket;
    c.log_p = lg(mass.first);
    c.log_q = lg(mass.second);
    classes.push_back(c);
  }
  return np_from_classes(std::move(classes), -double(n) * r);
}

}  // namespace

NpResult np_sweep(const ClassicalPair& pair, int n, double r) {
  if (pair.p.size() != pair.q.size() || pair.p.empty() || pair.p.size() > 8)
    throw std::invalid_argument("np_sweep: alphabet size must be 1..8");
  if (n < 1 || n > 5000)
    throw std::invalid_argument("np_sweep: block length must be 1..5000");
  if (!pair.normalized(1e-9))
    throw std::invalid_argument("np_sweep: pair must be normalized");
  if (pair.p.size() == 2) return np_sweep_binary(pair, n, r);
  return np_sweep_quantized(pair, n, r);
}

LadderReport sc_exponent_estimate(const ClassicalPair& pair, double r,
                                  const std::vector<int>& n_grid) {
  if (n_grid.size() < 2)
    throw std::invalid_argument("sc_exponent_estimate: need >= 2 block sizes");
  std::vector<int> ns = n_grid;
  std::sort(ns.begin(), ns.end());
  LadderReport rep;
  for (int n : ns) {
    NpResult np = np_sweep(pair, n, r);
    double e = -np.log_gamma / double(n);
    rep.levels.push_back(double(n));
    rep.values.push_back(ExtendedValue::finite(e));
    rep.log_values.push_back(e);
  }
  // Richardson-style extrapolation e_n ~ e_inf + c/n from the last two points.
  size_t k = rep.levels.size();
  double n1 = rep.levels[k - 2], n2 = rep.levels[k - 1];
  double e1 = rep.log_values[k - 2], e2 = rep.log_values[k - 1];
  rep.limit = (n2 * e2 - n1 * e1) / (n2 - n1);
  rep.est_error = std::abs(e2 - e1);
  rep.monotone = true;
  for (size_t i = 0; i + 1 < k; ++i)
    if (rep.log_values[i + 1] < rep.log_values[i] - 1e-9) rep.monotone = false;
  rep.verdict = Verdict::converged;
  return rep;
}

Mat apply_channel(const Channel& ch, const Mat& A) {
  ch.validate();
  return ch.dual_apply(A);
}

bool dpi_check(const Channel& ch, const Mat& rho, const Mat& sigma,
               double alpha) {
  ch.validate();
  ExtendedValue before = d_sandwiched(rho, sigma, alpha);
  if (before.is_pos_inf()) return true;
  ExtendedValue after =
      d_sandwiched(ch.dual_apply(rho), ch.dual_apply(sigma), alpha);
  if (after.is_pos_inf()) return false;
  return after.value <= before.value + 1e-8;
}

}  // namespace renyi
