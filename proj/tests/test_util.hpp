#pragma once

// Shared helpers for the test suite: seeded random operators and small scalar
// oracles independent of the library's own code paths.

#include <random>
#include <vector>

#include "core/operator_core.hpp"

namespace testutil {

using renyi::Cplx;
using renyi::Mat;

inline Mat random_gaussian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = Cplx(g(rng), g(rng));
  return G;
}

// Full-rank PSD matrix with unit trace.
inline Mat random_density(int d, std::mt19937_64& rng) {
  Mat G = random_gaussian(d, rng);
  Mat A = G * G.adjoint() + 1e-3 * Mat::Identity(d, d);
  return A / A.trace().real();
}

// PSD matrix with spectrum of order one (not normalized).
inline Mat random_psd(int d, std::mt19937_64& rng) {
  Mat G = random_gaussian(d, rng);
  Mat A = G * G.adjoint();
  return A / double(d);
}

inline std::vector<double> random_weights(int m, std::mt19937_64& rng,
                                          bool normalize = true) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(static_cast<size_t>(m), 0.0);
  double s = 0.0;
  for (auto& x : w) { x = u(rng); s += x; }
  if (normalize)
    for (auto& x : w) x /= s;
  return w;
}

inline Mat diag_matrix(const std::vector<double>& w) {
  Mat m = Mat::Zero(Eigen::Index(w.size()), Eigen::Index(w.size()));
  for (size_t i = 0; i < w.size(); ++i) m(Eigen::Index(i), Eigen::Index(i)) = w[i];
  return m;
}

// Scalar brute-force oracles for commuting pairs.
inline double oracle_q(const std::vector<double>& p,
                       const std::vector<double>& q, double alpha) {
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) acc += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  return acc;
}

inline double oracle_dmax(const std::vector<double>& p,
                          const std::vector<double>& q) {
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) best = std::max(best, std::log(p[i] / q[i]));
  return best;
}

inline double oracle_relentr(const std::vector<double>& p,
                             const std::vector<double>& q) {
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) acc += p[i] * (std::log(p[i]) - std::log(q[i]));
  return acc;
}

}  // namespace testutil
