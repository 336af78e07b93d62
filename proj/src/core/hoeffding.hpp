#pragma once

// The Hoeffding-dual cumulant curve psi-tilde and its Legendre-Fenchel
// machinery: anti-divergences over the open and closed unit interval, bipolar
// recovery, generalized cutoff rates, and tensor-power additivity checks.
//
// psi*(alpha) = log Q*_alpha,
// psi-tilde(u) = (1-u) psi*(1/(1-u)) for u in (0,1),
// psi-tilde(0) = log Tr rho,   psi-tilde(1) = D_max  (endpoint conventions),
// H_r  = sup_{u in (0,1)} { u r - psi-tilde(u) },
// H^_r = sup_{u in [0,1]} { u r - psi-tilde(u) },
// with the extended-real rule u r - (+inf) := -inf.

#include <functional>
#include <string>
#include <vector>

#include "diagonal_model.hpp"
#include "divergence.hpp"
#include "truncation.hpp"

namespace renyi {

struct PsiCurve {
  std::vector<double> u_grid;          // increasing, includes 0 and 1
  std::vector<ExtendedValue> values;   // psi-tilde per grid point
  std::string provenance;              // "exact" or "fa_ladder(N)"
  // Exact re-evaluation at arbitrary u in [0,1]; used by the golden-section
  // refinement of the Legendre suprema.
  std::function<ExtendedValue(double)> eval;
};

// Default u-grid: 101 uniform points (endpoints included).
std::vector<double> default_u_grid(int n = 101);

// Exact curve for a finite matrix pair.
PsiCurve psi_curve(const Mat& rho, const Mat& sigma,
                   const std::vector<double>& u_grid);
// Curve for a pair of diagonal models via their (possibly divergent) series.
PsiCurve psi_curve_model(const DiagonalModel& rho_m,
                         const DiagonalModel& sigma_m,
                         const std::vector<double>& u_grid);

struct AntiDivergenceReport {
  double r = 0.0;
  ExtendedValue H_star;   // sup over the open interval (0,1)
  ExtendedValue H_hat;    // sup over the closed interval [0,1]
  double maximizer_u = 0.0;
  bool has_maximizer = false;
};

// Legendre-Fenchel transform of the curve at rate r: grid pass plus
// golden-section refinement near the argmax using the exact evaluator.
AntiDivergenceReport hoeffding_anti(const PsiCurve& curve, double r);

// Bipolar recovery psi-tilde(u) = sup_r { u r - H_r } from a table of
// (r, H_r) pairs; *boundary is set when the supremum sits at a grid edge.
double bipolar_recover(const std::vector<std::pair<double, double>>& h_table,
                       double u, bool* boundary = nullptr);

// Default r-grid for bipolar recovery: 401 points spanning
// [-5 (1 + |D_max|), 5 (1 + |D_max|)].
std::vector<double> default_r_grid(double d_max_abs, int n = 401);

struct CutoffResult {
  bool regular = false;  // D*_alpha finite on the 3-point stencil around
                         // alpha_0 = 1/(1-kappa)
  double value = 0.0;    // C_kappa = D*_{alpha_0} when regular
  double lower = 0.0;    // bracket endpoints otherwise
  double upper = 0.0;
};
CutoffResult cutoff_rate(const Mat& rho, const Mat& sigma, double kappa);

// psi-tilde of the explicit n-fold tensor power (total dimension <= 4096);
// equals n times the single-copy value by additivity.
double tensor_power_psi(const Mat& rho, const Mat& sigma, int n, double u);

// n-fold Kronecker power (guarded to total dimension <= 4096).
Mat kron_power(const Mat& A, int n);

}  // namespace renyi
