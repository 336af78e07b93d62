#pragma once

// Minimal derivative-free minimizer (Nelder-Mead) for the small smooth
// problems in this library (conditional-entropy minimization over low-
// dimensional density matrices).  Deterministic given the starting point.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace renyi {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

inline NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double step = 0.2, int max_iter = 2000,
    double ftol = 1e-11) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> fv(n + 1);
  for (size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    // Order vertices by value.
    std::vector<size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    if (fv[idx[n]] - fv[idx[0]] < ftol * (1.0 + std::abs(fv[idx[0]]))) break;

    // Centroid of all but the worst vertex.
    std::vector<double> c(n, 0.0);
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[j] += simplex[idx[k]][j] / double(n);

    auto blend = [&](double t) {
      std::vector<double> y(n);
      for (size_t j = 0; j < n; ++j)
        y[j] = c[j] + t * (simplex[idx[n]][j] - c[j]);
      return y;
    };

    std::vector<double> xr = blend(-1.0);
    double fr = f(xr);
    if (fr < fv[idx[0]]) {
      std::vector<double> xe = blend(-2.0);
      double fe = f(xe);
      if (fe < fr) { simplex[idx[n]] = xe; fv[idx[n]] = fe; }
      else { simplex[idx[n]] = xr; fv[idx[n]] = fr; }
    } else if (fr < fv[idx[n - 1]]) {
      simplex[idx[n]] = xr; fv[idx[n]] = fr;
    } else {
      std::vector<double> xc = blend(0.5);
      double fc = f(xc);
      if (fc < fv[idx[n]]) { simplex[idx[n]] = xc; fv[idx[n]] = fc; }
      else {
        // Shrink toward the best vertex.
        for (size_t k = 1; k <= n; ++k) {
          for (size_t j = 0; j < n; ++j)
            simplex[idx[k]][j] =
                simplex[idx[0]][j] + 0.5 * (simplex[idx[k]][j] - simplex[idx[0]][j]);
          fv[idx[k]] = f(simplex[idx[k]]);
        }
      }
    }
  }

  size_t best = 0;
  for (size_t i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  return {simplex[best], fv[best], iter};
}

}  // namespace renyi
