#pragma once

// Closed-form eigenvalue sequences standing in for infinite-dimensional
// diagonal operators: power-law, super-exponential (superpower), geometric,
// and explicit finite lists.  A model is realized at a truncation level N as
// the diagonal matrix diag(lambda(1), ..., lambda(N)).

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace renyi {

class DiagonalModel {
 public:
  enum class Family { power, superpower, geometric, finite };

  // lambda(n) = c * n^(-beta), n >= 1.  Normalizable iff beta > 1.
  static DiagonalModel power(double beta, bool normalize);
  // lambda(n) = c * n^(-n^gamma); summable for every gamma > 0.
  static DiagonalModel superpower(double gamma, bool normalize);
  // lambda(n) = c * r^(n-1), 0 < r < 1; normalizer c = 1 - r.
  static DiagonalModel geometric(double r, bool normalize);
  // Explicit finite eigenvalue list (all strictly positive).
  static DiagonalModel finite(std::vector<double> values, bool normalize);

  Family family() const { return family_; }
  double parameter() const { return param_; }
  bool normalized() const { return normalize_; }
  // The scale factor c (1 when not normalizing, or when the infinite sum of
  // the raw sequence diverges).
  double scale() const { return c_; }

  // n-th eigenvalue, 1-based.  Returns 0 beyond the end of a finite list.
  double lambda(long n) const;
  double log_lambda(long n) const;  // -inf where lambda vanishes

  // diag(lambda(1..N)) as a vector of diagonal entries.
  Eigen::VectorXd realize(int N) const;

  // Trace of the infinite model if the series converges (tail < 1e-14);
  // nullopt when it diverges.
  std::optional<double> infinite_trace() const;

  // Trace of the level-N truncation.
  double truncated_trace(int N) const;

  std::string describe() const;

 private:
  DiagonalModel() = default;
  Family family_ = Family::finite;
  double param_ = 0.0;
  std::vector<double> values_;
  bool normalize_ = false;
  double c_ = 1.0;
};

// Riemann zeta(s) for s > 1 by direct series with an Euler-Maclaurin tail,
// absolute error below 1e-14.  Exposed for use as a test oracle.
double riemann_zeta(double s);

}  // namespace renyi
