#include "diagonal_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace renyi {

double riemann_zeta(double s) {
  if (!(s > 1.0))
    throw std::invalid_argument("riemann_zeta: need s > 1");
  // Direct sum to M inclusive, then the Euler-Maclaurin tail over n >= M+1:
  // M^{1-s}/(s-1) - M^{-s}/2 + s*M^{-s-1}/12 - s(s+1)(s+2)*M^{-s-3}/720,
  // remainder O(M^{-s-5}).
  const double M = 2000.0;
  double acc = 0.0;
  for (double n = 1.0; n <= M; n += 1.0) acc += std::pow(n, -s);
  acc += std::pow(M, 1.0 - s) / (s - 1.0);
  acc -= 0.5 * std::pow(M, -s);
  acc += s * std::pow(M, -s - 1.0) / 12.0;
  acc -= s * (s + 1.0) * (s + 2.0) * std::pow(M, -s - 3.0) / 720.0;
  return acc;
}

namespace {

// Sum of n^(-n^gamma) over n >= 1; terms decay super-exponentially.
double superpower_sum(double gamma) {
  double acc = 0.0;
  for (long n = 1;; ++n) {
    double term = std::exp(-std::pow(double(n), gamma) * std::log(double(n)));
    acc += term;
    if (n > 2 && term < 1e-18) break;
    if (n > 1000000)
      throw std::runtime_error("superpower_sum: series did not converge");
  }
  return acc;
}

}  // namespace

DiagonalModel DiagonalModel::power(double beta, bool normalize) {
  if (!(beta > 0.0))
    throw std::invalid_argument("DiagonalModel::power: beta must be > 0");
  DiagonalModel m;
  m.family_ = Family::power;
  m.param_ = beta;
  m.normalize_ = normalize;
  // Normalizable only when the zeta series converges.
  m.c_ = (normalize && beta > 1.0) ? 1.0 / riemann_zeta(beta) : 1.0;
  return m;
}

DiagonalModel DiagonalModel::superpower(double gamma, bool normalize) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("DiagonalModel::superpower: gamma must be > 0");
  DiagonalModel m;
  m.family_ = Family::superpower;
  m.param_ = gamma;
  m.normalize_ = normalize;
  m.c_ = normalize ? 1.0 / superpower_sum(gamma) : 1.0;
  return m;
}

DiagonalModel DiagonalModel::geometric(double r, bool normalize) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("DiagonalModel::geometric: need 0 < r < 1");
  DiagonalModel m;
  m.family_ = Family::geometric;
  m.param_ = r;
  m.normalize_ = normalize;
  m.c_ = normalize ? (1.0 - r) : 1.0;
  return m;
}

DiagonalModel DiagonalModel::finite(std::vector<double> values, bool normalize) {
  if (values.empty())
    throw std::invalid_argument("DiagonalModel::finite: empty list");
  double tr = 0.0;
  for (double v : values) {
    if (!(v > 0.0))
      throw std::invalid_argument(
          "DiagonalModel::finite: eigenvalues must be strictly positive");
    tr += v;
  }
  DiagonalModel m;
  m.family_ = Family::finite;
  m.values_ = std::move(values);
  m.normalize_ = normalize;
  m.c_ = normalize ? 1.0 / tr : 1.0;
  return m;
}

double DiagonalModel::log_lambda(long n) const {
  if (n < 1) throw std::invalid_argument("DiagonalModel::lambda: n >= 1");
  const double logc = std::log(c_);
  switch (family_) {
    case Family::power:
      return logc - param_ * std::log(double(n));
    case Family::superpower:
      return logc - std::pow(double(n), param_) * std::log(double(n));
    case Family::geometric:
      return logc + double(n - 1) * std::log(param_);
    case Family::finite:
      if (n > long(values_.size()))
        return -std::numeric_limits<double>::infinity();
      return logc + std::log(values_[size_t(n - 1)]);
  }
  return -std::numeric_limits<double>::infinity();
}

double DiagonalModel::lambda(long n) const { return std::exp(log_lambda(n)); }

Eigen::VectorXd DiagonalModel::realize(int N) const {
  if (N < 1) throw std::invalid_argument("DiagonalModel::realize: N >= 1");
  Eigen::VectorXd d(N);
  for (int n = 1; n <= N; ++n) d(n - 1) = lambda(n);
  return d;
}

std::optional<double> DiagonalModel::infinite_trace() const {
  switch (family_) {
    case Family::power:
      if (param_ <= 1.0) return std::nullopt;
      return c_ * riemann_zeta(param_);
    case Family::superpower:
      return c_ * superpower_sum(param_);
    case Family::geometric:
      return c_ / (1.0 - param_);
    case Family::finite: {
      double tr = 0.0;
      for (double v : values_) tr += v;
      return c_ * tr;
    }
  }
  return std::nullopt;
}

double DiagonalModel::truncated_trace(int N) const {
  double tr = 0.0;
  for (int n = 1; n <= N; ++n) tr += lambda(n);
  return tr;
}

std::string DiagonalModel::describe() const {
  switch (family_) {
    case Family::power:
      return "power(beta=" + std::to_string(param_) + ")";
    case Family::superpower:
      return "superpower(gamma=" + std::to_string(param_) + ")";
    case Family::geometric:
      return "geometric(r=" + std::to_string(param_) + ")";
    case Family::finite:
      return "finite(" + std::to_string(values_.size()) + " values)";
  }
  return "?";
}

}  // namespace renyi
