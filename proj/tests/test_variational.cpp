#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/variational.hpp"
#include "test_util.hpp"

using namespace renyi;
using testutil::diag_matrix;
using testutil::random_density;
using testutil::random_psd;

TEST_CASE("eval_F / eval_G: identity witness reduces to plain traces") {
  std::mt19937_64 rng(3);
  Mat rho = random_density(3, rng);
  Mat sigma = random_density(3, rng);
  AlphaZ p(2.0, 2.0);
  Mat I = Mat::Identity(3, 3);
  // F(I) = Tr rho^{... z/alpha of alpha/z ...} = Tr rho; G(I) = Tr sigma.
  CHECK(eval_F(I, rho, p) == doctest::Approx(rho.trace().real()).epsilon(1e-10));
  CHECK(eval_G(I, sigma, p) ==
        doctest::Approx(sigma.trace().real()).epsilon(1e-10));
}

TEST_CASE("optimizer_H saturates Q on full windows") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Mat rho = random_density(3, rng);
    Mat sigma = random_density(3, rng);
    for (auto [a, z] : std::vector<std::pair<double, double>>{
             {1.5, 1.5}, {2.0, 2.0}, {3.0, 3.0}, {2.0, 1.0}, {3.0, 2.0}}) {
      AlphaZ p(a, z);
      VariationalWitness w = optimizer_H_full(rho, sigma, p);
      double q = q_alpha_z(rho, sigma, p).value;
      CHECK(w.objective_Q == doctest::Approx(q).epsilon(1e-8));
      // The optimizer balances F and G at the common value Q.
      CHECK(w.F_value == doctest::Approx(w.G_value).epsilon(1e-8));
      CHECK(w.F_value == doctest::Approx(q).epsilon(1e-8));
      // log objective agrees too.
      CHECK(w.objective_logQ == doctest::Approx(std::log(q)).epsilon(1e-7));
    }
  }
}

TEST_CASE("optimizer_H over a sub-window saturates the truncated Q") {
  std::mt19937_64 rng(11);
  Mat rho = random_density(4, rng);
  Mat sigma = random_density(4, rng);
  AlphaZ p(2.0, 2.0);
  SpectralData sd = spectral_decompose(sigma);
  // Window keeping only the top two eigenvalues of sigma.
  double c = (sd.eigenvalues(1) + sd.eigenvalues(2)) / 2.0;
  double d = 2.0 * sd.eigenvalues(0);
  VariationalWitness w = optimizer_H(rho, sigma, p, c, d);
  Mat P = spectral_truncation(sigma, c, d);
  double q_trunc = q_alpha_z(Mat(P * rho * P), Mat(P * sigma * P), p).value;
  CHECK(w.objective_Q == doctest::Approx(q_trunc).epsilon(1e-7));
}

TEST_CASE("no witness exceeds Q (upper-bound side of the sup formula)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Mat rho = random_density(3, rng);
    Mat sigma = random_density(3, rng);
    AlphaZ p(2.0, 2.0);
    double q = q_alpha_z(rho, sigma, p).value;
    for (int w = 0; w < 25; ++w) {
      Mat H = random_psd(3, rng);
      double obj = q_var_objective(H, rho, sigma, p);
      CHECK(obj <= q + 1e-8 * std::max(1.0, q));
      // The log form is bounded by log Q wherever admissible.
      double lobj = logq_var_objective(H, rho, sigma, p);
      CHECK(lobj <= std::log(q) + 1e-7);
    }
  }
}

TEST_CASE("objective is invariant under positive scaling of the witness in "
          "the log form") {
  // alpha log F(tH) + (1-alpha) log G(tH): F scales as t^{z/alpha},
  // G as t^{z/(alpha-1)}; the combination alpha * z/alpha - ... is scale-free.
  std::mt19937_64 rng(17);
  Mat rho = random_density(3, rng);
  Mat sigma = random_density(3, rng);
  AlphaZ p(2.0, 2.0);
  Mat H = random_psd(3, rng);
  double a = logq_var_objective(H, rho, sigma, p);
  double b = logq_var_objective(Mat(7.3 * H), rho, sigma, p);
  CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("inadmissible witness (G = 0) is rejected in the log form") {
  Mat rho = diag_matrix({0.7, 0.3});
  Mat sigma = diag_matrix({0.5, 0.5});
  AlphaZ p(2.0, 2.0);
  CHECK_THROWS_AS(logq_var_objective(Mat::Zero(2, 2), rho, sigma, p),
                  std::invalid_argument);
}

TEST_CASE("optimizer_H throws on support violation and empty window") {
  Mat rho = diag_matrix({0.5, 0.5});
  Mat sigma = diag_matrix({1.0, 0.0});
  CHECK_THROWS_AS(optimizer_H_full(rho, sigma, AlphaZ(2.0, 2.0)),
                  std::invalid_argument);
  Mat ok_sigma = diag_matrix({0.5, 0.5});
  CHECK_THROWS_AS(optimizer_H(rho, ok_sigma, AlphaZ(2.0, 2.0), 10.0, 20.0),
                  std::invalid_argument);
}

TEST_CASE("var_certificate certifies with the optimizer present and reports "
          "an honest gap without it") {
  std::mt19937_64 rng(23);
  Mat rho = random_density(3, rng);
  Mat sigma = random_density(3, rng);
  AlphaZ p(2.0, 2.0);
  VariationalWitness opt = optimizer_H_full(rho, sigma, p);
  VarCertificate good =
      var_certificate(rho, sigma, p, {Mat::Identity(3, 3), opt.H});
  CHECK(good.certified);
  CHECK(good.gap_rel < 1e-6);
  CHECK(good.q == doctest::Approx(q_alpha_z(rho, sigma, p).value));

  VarCertificate weak = var_certificate(rho, sigma, p, {Mat::Identity(3, 3)});
  CHECK(weak.best_objective <= weak.q + 1e-10);
  // Identity alone does not saturate a generic pair.
  CHECK_FALSE(weak.certified);
}

TEST_CASE("classical (commuting) sanity: frozen Bernoulli value") {
  Mat rho = diag_matrix({0.7, 0.3});
  Mat sigma = diag_matrix({0.5, 0.5});
  AlphaZ p(2.0, 2.0);
  VariationalWitness w = optimizer_H_full(rho, sigma, p);
  CHECK(w.objective_Q == doctest::Approx(1.16).epsilon(1e-10));
}
