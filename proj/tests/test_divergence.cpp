#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/divergence.hpp"
#include "test_util.hpp"

using namespace renyi;
using testutil::diag_matrix;
using testutil::random_density;
using testutil::random_psd;

namespace {

// Frozen Bernoulli pair used throughout: p = (0.7, 0.3), q = (0.5, 0.5).
const std::vector<double> kP{0.7, 0.3};
const std::vector<double> kQ{0.5, 0.5};
// Q_2(p||q) = 0.49/0.5 + 0.09/0.5 = 1.16 exactly.
const double kQ2 = 1.16;

}  // namespace

TEST_CASE("q_alpha_z: commuting pairs match the scalar formula") {
  Mat rho = diag_matrix(kP), sigma = diag_matrix(kQ);
  // For commuting pairs the value is independent of z.
  for (double z : {0.5, 1.0, 2.0, 4.0}) {
    ExtendedValue q = q_alpha_z(rho, sigma, AlphaZ(2.0, z));
    REQUIRE(q.is_finite());
    CHECK(q.value == doctest::Approx(kQ2).epsilon(1e-12));
  }
  // alpha = 3: 0.343/0.25 + 0.027/0.25 = 1.48.
  ExtendedValue q3 = q_alpha_z(rho, sigma, AlphaZ(3.0, 3.0));
  CHECK(q3.value == doctest::Approx(1.48).epsilon(1e-12));
}

TEST_CASE("q_alpha_z: identity pair and support violation") {
  Mat I3 = Mat::Identity(3, 3);
  ExtendedValue q = q_alpha_z(I3, I3, AlphaZ(2.0, 1.5));
  CHECK(q.value == doctest::Approx(3.0).epsilon(1e-12));

  Mat rho = diag_matrix({0.5, 0.5});
  Mat sigma = diag_matrix({1.0, 0.0});
  ExtendedValue v = q_alpha_z(rho, sigma, AlphaZ(2.0, 2.0));
  CHECK(v.is_pos_inf());
  CHECK(v.reason == Reason::support_violation);
}

TEST_CASE("d_alpha_z: zero on equal densities, frozen classical value") {
  std::mt19937_64 rng(7);
  Mat rho = random_density(4, rng);
  ExtendedValue d = d_alpha_z(rho, rho, AlphaZ(2.0, 2.0));
  CHECK(std::abs(d.value) < 1e-11);

  Mat p = diag_matrix(kP), q = diag_matrix(kQ);
  ExtendedValue d2 = d_sandwiched(p, q, 2.0);
  CHECK(d2.value == doctest::Approx(std::log(kQ2)).epsilon(1e-12));
}

TEST_CASE("scaling laws under positive rescalings of rho and sigma") {
  // D(lam rho || eta sigma) = D(rho||sigma) + (log lam) + (log(lam/eta)) ...
  // precisely: log Q(lam rho||eta sigma) = alpha log lam + (1-alpha) log eta
  //            + log Q(rho||sigma).
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Mat rho = random_psd(3, rng);
    Mat sigma = random_psd(3, rng);
    double lam = 0.3 + 2.0 * double(rng() % 100) / 100.0;
    double eta = 0.2 + 1.5 * double(rng() % 100) / 100.0;
    AlphaZ p(2.5, 1.7);
    double base = log_q_alpha_z(rho, sigma, p).value;
    double scaled = log_q_alpha_z(lam * rho, eta * sigma, p).value;
    CHECK(scaled == doctest::Approx(base + p.alpha * std::log(lam) +
                                    (1.0 - p.alpha) * std::log(eta))
                        .epsilon(1e-10));
  }
}

TEST_CASE("d_max: frozen values and support violation") {
  std::mt19937_64 rng(19);
  Mat rho = random_density(3, rng);
  CHECK(std::abs(d_max(rho, rho).value) < 1e-10);

  Mat p = diag_matrix(kP), q = diag_matrix(kQ);
  CHECK(d_max(p, q).value == doctest::Approx(std::log(1.4)).epsilon(1e-12));

  Mat bad_sigma = diag_matrix({1.0, 0.0});
  CHECK(d_max(p, bad_sigma).is_pos_inf());
}

TEST_CASE("relative_entropy: frozen values, scaling, commuting oracle") {
  Mat p = diag_matrix(kP), q = diag_matrix(kQ);
  double oracle = 0.7 * std::log(1.4) + 0.3 * std::log(0.6);
  CHECK(relative_entropy(p, q).value == doctest::Approx(oracle).epsilon(1e-12));

  std::mt19937_64 rng(23);
  Mat rho = random_density(4, rng);
  CHECK(std::abs(relative_entropy(rho, rho).value) < 1e-11);

  // D(rho || eta sigma) = D(rho||sigma) - log eta for a density rho.
  Mat sigma = random_density(4, rng);
  double base = relative_entropy(rho, sigma).value;
  CHECK(relative_entropy(rho, 2.0 * sigma).value ==
        doctest::Approx(base - std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("renyi_entropy: frozen values") {
  // Maximally mixed state: S_alpha = log d for every alpha.
  Mat mm = Mat::Identity(4, 4) / 4.0;
  CHECK(renyi_entropy(mm, 2.0) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(renyi_entropy(mm, 5.0) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  // diag(0.7, 0.3) at alpha = 2: -log(0.58).
  CHECK(renyi_entropy(diag_matrix(kP), 2.0) ==
        doctest::Approx(-std::log(0.58)).epsilon(1e-12));
  // Pure state: zero entropy.
  Mat pure = diag_matrix({1.0, 0.0, 0.0});
  CHECK(std::abs(renyi_entropy(pure, 2.0)) < 1e-11);
}

TEST_CASE("z-monotonicity: Q non-increasing in z at fixed alpha > 1") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 2 + int(rng() % 4);
    Mat rho = random_density(d, rng);
    Mat sigma = random_density(d, rng);
    for (double alpha : {1.5, 2.0, 3.0}) {
      std::vector<double> zs = {0.6,   1.0,         alpha / 2.0,
                                alpha, 2.0 * alpha, 4.0 * alpha};
      std::sort(zs.begin(), zs.end());
      double prev = std::numeric_limits<double>::infinity();
      for (double z : zs) {
        double lq = log_q_alpha_z(rho, sigma, AlphaZ(alpha, z)).value;
        CHECK(lq <= prev + 1e-9);
        prev = lq;
      }
    }
  }
}

TEST_CASE("sandwiched <= Petz on random pairs") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + int(rng() % 4);
    Mat rho = random_density(d, rng);
    Mat sigma = random_density(d, rng);
    for (double alpha : {1.5, 2.0, 3.0}) {
      CHECK(d_sandwiched(rho, sigma, alpha).value <=
            d_petz(rho, sigma, alpha).value + 1e-9);
    }
  }
}

TEST_CASE("tensor additivity: log Q(rho1 x rho2 || sig1 x sig2) splits") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    Mat r1 = random_density(2, rng), r2 = random_density(3, rng);
    Mat s1 = random_density(2, rng), s2 = random_density(3, rng);
    AlphaZ p(2.0, 1.3);
    double joint = log_q_alpha_z(kron(r1, r2), kron(s1, s2), p).value;
    double split = log_q_alpha_z(r1, s1, p).value +
                   log_q_alpha_z(r2, s2, p).value;
    CHECK(joint == doctest::Approx(split).epsilon(1e-9));
  }
}

TEST_CASE("trace bound: Q >= (Tr rho)^alpha (Tr sigma)^{1-alpha}, equality "
          "iff sigma is a multiple of rho") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    Mat rho = random_psd(3, rng);
    Mat sigma = random_psd(3, rng);
    AlphaZ p(2.0, 2.0);
    double lq = log_q_alpha_z(rho, sigma, p).value;
    double bound = p.alpha * std::log(rho.trace().real()) +
                   (1.0 - p.alpha) * std::log(sigma.trace().real());
    CHECK(lq >= bound - 1e-10);
    // Generic pairs are strictly above the bound.
    CHECK(lq > bound + 1e-6);
    // Equality when sigma = eta rho.
    double eq = log_q_alpha_z(rho, 1.7 * rho, p).value;
    double eq_bound = p.alpha * std::log(rho.trace().real()) +
                      (1.0 - p.alpha) * std::log(1.7 * rho.trace().real());
    CHECK(eq == doctest::Approx(eq_bound).epsilon(1e-10));
  }
}

TEST_CASE("positivity: D >= 0 for densities with equality iff rho = sigma") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    Mat rho = random_density(3, rng);
    Mat sigma = random_density(3, rng);
    CHECK(d_sandwiched(rho, sigma, 2.0).value >= -1e-10);
    CHECK(d_sandwiched(rho, sigma, 2.0).value > 1e-6);  // generic distinct pair
    CHECK(std::abs(d_sandwiched(rho, rho, 2.0).value) < 1e-10);
  }
}

TEST_CASE("(alpha-1)/alpha ordering: ((a-1)/a) D*_a is non-decreasing in a") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    Mat rho = random_density(3, rng);
    Mat sigma = random_density(3, rng);
    double prev = -std::numeric_limits<double>::infinity();
    for (double a : {1.2, 1.5, 2.0, 3.0, 5.0, 8.0}) {
      double v = (a - 1.0) / a * d_sandwiched(rho, sigma, a).value;
      CHECK(v >= prev - 1e-10);
      prev = v;
    }
  }
}

TEST_CASE("lower semicontinuity at a support-violating limit (z >= alpha)") {
  // rho_eps -> rho with supp rho not inside supp sigma: Q(rho_eps||sigma)
  // must blow up (converge to +inf) along the sequence.
  Mat sigma = diag_matrix({1.0, 0.0});
  Mat rho_limit = diag_matrix({0.5, 0.5});
  AlphaZ p(2.0, 3.0);  // z >= alpha
  double prev = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    Mat sig_eps = diag_matrix({1.0, eps});
    double lq = log_q_alpha_z(rho_limit, sig_eps, p).value;
    CHECK(lq > prev);  // increases toward +inf as the support closes
    prev = lq;
  }
  CHECK(prev > 10.0);
  CHECK(q_alpha_z(rho_limit, sigma, p).is_pos_inf());
}

TEST_CASE("log_q_alpha_z stays finite at alpha = 4096 (log-domain evaluation)") {
  Mat p = diag_matrix(kP), q = diag_matrix(kQ);
  double a = 4096.0;
  ExtendedValue lq = log_q_alpha_z(p, q, AlphaZ(a, a));
  REQUIRE(lq.is_finite());
  // log Q ~ alpha log 1.4 + O(1): D-tilde must sit within 1e-2 of D_max.
  double dt = d_tilde(p, q, AlphaZ(a, a)).value;
  CHECK(std::abs(dt - std::log(1.4)) < 1e-2);
}

TEST_CASE("d_tilde removes the normalization offset") {
  std::mt19937_64 rng(59);
  Mat rho = random_density(3, rng);
  Mat sigma = random_density(3, rng);
  AlphaZ p(2.0, 2.0);
  // For a density, D and D-tilde coincide.
  CHECK(d_tilde(rho, sigma, p).value ==
        doctest::Approx(d_alpha_z(rho, sigma, p).value).epsilon(1e-12));
  // For 3 rho: tilde-D(3 rho||sigma) = tilde-D(rho||sigma) + log 3.
  CHECK(d_tilde(3.0 * rho, sigma, p).value ==
        doctest::Approx(d_tilde(rho, sigma, p).value + std::log(3.0))
            .epsilon(1e-10));
}

TEST_CASE("conditional Renyi entropies") {
  std::mt19937_64 rng(61);
  // Product state: S_down(A|B) = S_alpha(rho_A).
  Mat rho_A = random_density(2, rng);
  Mat rho_B = random_density(2, rng);
  Mat prod = kron(rho_A, rho_B);
  AlphaZ p(2.0, 2.0);
  CHECK(cond_entropy_down(prod, 2, 2, p) ==
        doctest::Approx(renyi_entropy(rho_A, 2.0)).epsilon(1e-9));

  // Maximally entangled 2-qubit state: S_down = -log 2 at alpha = z = 2.
  Mat psi = Mat::Zero(4, 4);
  Eigen::VectorXcd v(4);
  v << Cplx(1 / std::sqrt(2.0), 0), Cplx(0, 0), Cplx(0, 0),
      Cplx(1 / std::sqrt(2.0), 0);
  psi = v * v.adjoint();
  CHECK(cond_entropy_down(psi, 2, 2, p) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-9));

  // S_up >= S_down always; equality for the product state.
  CondUpResult up = cond_entropy_up(prod, 2, 2, p, 3, 8);
  CHECK(up.value >= cond_entropy_down(prod, 2, 2, p) - 1e-7);
  CHECK(up.value ==
        doctest::Approx(renyi_entropy(rho_A, 2.0)).epsilon(1e-6));
  Mat mixed = 0.8 * psi + 0.2 * kron(rho_A, rho_B);
  CHECK(cond_entropy_up(mixed, 2, 2, p, 3, 8).value >=
        cond_entropy_down(mixed, 2, 2, p) - 1e-7);
}

TEST_CASE("lambda_min_dominance") {
  Mat p = diag_matrix(kP), q = diag_matrix(kQ);
  // rho = sigma at alpha = z: ||rho_{sigma}||_inf = lambda_max^{1/alpha}.
  ExtendedValue lam = lambda_min_dominance(p, p, AlphaZ(2.0, 2.0));
  CHECK(lam.value == doctest::Approx(std::sqrt(0.7)).epsilon(1e-10));
  Mat bad = diag_matrix({1.0, 0.0});
  CHECK(lambda_min_dominance(p, bad, AlphaZ(2.0, 2.0)).is_pos_inf());
}

TEST_CASE("classical_log_q matches the matrix route and flags violations") {
  CHECK(classical_log_q(kP, kQ, 2.0).value ==
        doctest::Approx(std::log(kQ2)).epsilon(1e-13));
  ExtendedValue v = classical_log_q({0.5, 0.5}, {1.0, 0.0}, 2.0);
  CHECK(v.is_pos_inf());
  CHECK(v.reason == Reason::support_violation);
  // p_i = 0 terms are dropped, not violations.
  CHECK(classical_log_q({1.0, 0.0}, {0.5, 0.5}, 2.0).is_finite());
}

TEST_CASE("partial traces and kron are mutually consistent") {
  std::mt19937_64 rng(67);
  Mat A = random_density(2, rng), B = random_density(3, rng);
  Mat AB = kron(A, B);
  CHECK((partial_trace_B(AB, 2, 3) - A).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((partial_trace_A(AB, 2, 3) - B).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("invalid inputs are rejected") {
  Mat a = Mat::Identity(2, 2), b = Mat::Identity(3, 3);
  CHECK_THROWS_AS(q_alpha_z(a, b, AlphaZ(2.0, 2.0)), std::invalid_argument);
  CHECK_THROWS_AS(q_alpha_z(Mat::Zero(2, 2), a, AlphaZ(2.0, 2.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlphaZ(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AlphaZ(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AlphaZ(0.5, 1.0), std::invalid_argument);
}
