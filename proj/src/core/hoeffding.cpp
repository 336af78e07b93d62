#include "hoeffding.hpp"

#include <algorithm>
#include <cmath>

namespace renyi {

std::vector<double> default_u_grid(int n) {
  std::vector<double> g(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) g[size_t(i)] = double(i) / double(n - 1);
  g.front() = 0.0;
  g.back() = 1.0;
  return g;
}

namespace {

PsiCurve build_curve(const std::vector<double>& u_grid,
                     std::function<ExtendedValue(double)> eval,
                     std::string provenance) {
  PsiCurve c;
  c.u_grid = u_grid;
  std::sort(c.u_grid.begin(), c.u_grid.end());
  c.provenance = std::move(provenance);
  c.eval = std::move(eval);
  for (double u : c.u_grid) c.values.push_back(c.eval(u));
  return c;
}

}  // namespace

PsiCurve psi_curve(const Mat& rho, const Mat& sigma,
                   const std::vector<double>& u_grid) {
  auto eval = [rho, sigma](double u) -> ExtendedValue {
    if (!(u >= 0.0 && u <= 1.0))
      throw std::invalid_argument("psi_curve: u outside [0,1]");
    if (u == 0.0) {
      return {std::log(rho.trace().real()), Reason::endpoint_convention};
    }
    if (u == 1.0) {
      ExtendedValue dm = d_max(rho, sigma);
      if (dm.is_pos_inf()) return dm;
      return {dm.value, Reason::endpoint_convention};
    }
    double alpha = 1.0 / (1.0 - u);
    ExtendedValue lq = log_q_alpha_z(rho, sigma, AlphaZ(alpha, alpha));
    if (lq.is_pos_inf()) return lq;
    return ExtendedValue::finite((1.0 - u) * lq.value);
  };
  return build_curve(u_grid, eval, "exact");
}

PsiCurve psi_curve_model(const DiagonalModel& rho_m,
                         const DiagonalModel& sigma_m,
                         const std::vector<double>& u_grid) {
  auto eval = [rho_m, sigma_m](double u) -> ExtendedValue {
    if (!(u >= 0.0 && u <= 1.0))
      throw std::invalid_argument("psi_curve_model: u outside [0,1]");
    if (u == 0.0) {
      auto tr = rho_m.infinite_trace();
      if (!tr) return ExtendedValue::pos_inf(Reason::ladder_divergent);
      return {std::log(*tr), Reason::endpoint_convention};
    }
    if (u == 1.0) {
      ExtendedValue dm = model_d_max(rho_m, sigma_m);
      if (dm.is_pos_inf()) return dm;
      return {dm.value, Reason::endpoint_convention};
    }
    double alpha = 1.0 / (1.0 - u);
    ExtendedValue lq = model_log_q(rho_m, sigma_m, alpha);
    if (lq.is_pos_inf()) return lq;
    return ExtendedValue::finite((1.0 - u) * lq.value);
  };
  return build_curve(u_grid, eval, "fa_ladder(series)");
}

namespace {

// u r - psi-tilde(u) with the extended-real convention u r - (+inf) := -inf.
double legendre_term(double u, double r, const ExtendedValue& psi) {
  if (psi.is_pos_inf()) return -std::numeric_limits<double>::infinity();
  return u * r - psi.value;
}

// Golden-section maximization of the (concave) Legendre objective on [lo, hi]
// using exact curve re-evaluations.
double golden_refine(const PsiCurve& curve, double r, double lo, double hi,
                     double* arg_out) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto g = [&](double u) { return legendre_term(u, r, curve.eval(u)); };
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = g(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = g(x1);
    }
  }
  double u_best = (f1 >= f2) ? x1 : x2;
  if (arg_out) *arg_out = u_best;
  return std::max(f1, f2);
}

}  // namespace

AntiDivergenceReport hoeffding_anti(const PsiCurve& curve, double r) {
  AntiDivergenceReport rep;
  rep.r = r;
  const size_t n = curve.u_grid.size();
  if (n < 2) throw std::invalid_argument("hoeffding_anti: degenerate curve");

  // Grid pass over [0,1] and over the interior.
  double best_hat = -std::numeric_limits<double>::infinity();
  size_t best_hat_i = 0;
  double best_star = -std::numeric_limits<double>::infinity();
  size_t best_star_i = 0;
  bool star_found = false;
  for (size_t i = 0; i < n; ++i) {
    double g = legendre_term(curve.u_grid[i], r, curve.values[i]);
    if (g > best_hat) { best_hat = g; best_hat_i = i; }
    if (curve.u_grid[i] > 0.0 && curve.u_grid[i] < 1.0 && g > best_star) {
      best_star = g; best_star_i = i; star_found = true;
    }
  }

  // Refine the closed-interval supremum around the grid argmax.
  double u_hat = curve.u_grid[best_hat_i];
  if (std::isfinite(best_hat)) {
    double lo = best_hat_i > 0 ? curve.u_grid[best_hat_i - 1] : 0.0;
    double hi = best_hat_i + 1 < n ? curve.u_grid[best_hat_i + 1] : 1.0;
    double u_ref = u_hat;
    double g_ref = golden_refine(curve, r, lo, hi, &u_ref);
    if (g_ref > best_hat) { best_hat = g_ref; u_hat = u_ref; }
  }

  // Refine the open-interval supremum; stay strictly inside (0,1).
  if (star_found && std::isfinite(best_star)) {
    const double eps = 1e-12;
    size_t i = best_star_i;
    double lo = std::max(i > 0 ? curve.u_grid[i - 1] : 0.0, eps);
    double hi = std::min(i + 1 < n ? curve.u_grid[i + 1] : 1.0, 1.0 - eps);
    double u_ref;
    double g_ref = golden_refine(curve, r, lo, hi, &u_ref);
    best_star = std::max(best_star, g_ref);
  }

  rep.H_star = std::isfinite(best_star)
                   ? ExtendedValue::finite(best_star)
                   : ExtendedValue::neg_inf(Reason::endpoint_convention);
  rep.H_hat = std::isfinite(best_hat)
                  ? ExtendedValue::finite(best_hat)
                  : ExtendedValue::neg_inf(Reason::endpoint_convention);
  if (std::isfinite(best_hat)) {
    rep.maximizer_u = u_hat;
    rep.has_maximizer = true;
  }
  return rep;
}

double bipolar_recover(const std::vector<std::pair<double, double>>& h_table,
                       double u, bool* boundary) {
  if (h_table.empty())
    throw std::invalid_argument("bipolar_recover: empty table");
  double best = -std::numeric_limits<double>::infinity();
  size_t best_i = 0;
  for (size_t i = 0; i < h_table.size(); ++i) {
    double v = u * h_table[i].first - h_table[i].second;
    if (v > best) { best = v; best_i = i; }
  }
  if (boundary) *boundary = (best_i == 0 || best_i + 1 == h_table.size());
  return best;
}

std::vector<double> default_r_grid(double d_max_abs, int n) {
  double span = 5.0 * (1.0 + std::abs(d_max_abs));
  std::vector<double> g(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    g[size_t(i)] = -span + 2.0 * span * double(i) / double(n - 1);
  return g;
}

CutoffResult cutoff_rate(const Mat& rho, const Mat& sigma, double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::invalid_argument("cutoff_rate: kappa must be in (0,1)");
  const double alpha0 = 1.0 / (1.0 - kappa);
  // 3-point regularity stencil around alpha_0 (kept above 1).
  const double h = 0.01 * (alpha0 - 1.0);
  const double stencil[3] = {alpha0 - h, alpha0, alpha0 + h};
  ExtendedValue d[3];
  bool all_finite = true;
  for (int i = 0; i < 3; ++i) {
    d[i] = d_sandwiched(rho, sigma, stencil[i]);
    if (!d[i].is_finite()) all_finite = false;
  }
  CutoffResult out;
  if (all_finite) {
    out.regular = true;
    out.value = d[1].value;
    out.lower = out.upper = d[1].value;
    return out;
  }
  // Bracket: largest finite stencil value from below, D*_{alpha_0} from above.
  out.regular = false;
  out.lower = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i)
    if (d[i].is_finite()) out.lower = std::max(out.lower, d[i].value);
  out.upper = d[1].value;  // may be +inf
  out.value = out.upper;
  return out;
}

Mat kron_power(const Mat& A, int n) {
  if (n < 1) throw std::invalid_argument("kron_power: n >= 1");
  double total = std::pow(double(A.rows()), double(n));
  if (total > 4096.0)
    throw std::invalid_argument("kron_power: total dimension exceeds 4096");
  Mat out = A;
  for (int k = 1; k < n; ++k) out = kron(out, A);
  return out;
}

double tensor_power_psi(const Mat& rho, const Mat& sigma, int n, double u) {
  Mat rn = kron_power(rho, n);
  Mat sn = kron_power(sigma, n);
  PsiCurve c = psi_curve(rn, sn, {0.0, 1.0});
  ExtendedValue v = c.eval(u);
  if (!v.is_finite() && !(std::isinf(v.value) && v.value < 0))
    throw std::runtime_error("tensor_power_psi: +inf curve value");
  return v.value;
}

}  // namespace renyi
