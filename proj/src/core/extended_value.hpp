#pragma once

// Extended-real results and validated (alpha, z) parameter pairs shared by
// every module of the library.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace renyi {

// Why a quantity is not an ordinary finite number (or that it is).
enum class Reason {
  finite,
  support_violation,   // supp(rho) not contained in supp(sigma)
  ladder_divergent,    // a truncation ladder blew past the divergence cap
  endpoint_convention, // value fixed by an endpoint convention (u=0 or u=1)
  not_evaluated,
};

inline const char* reason_name(Reason r) {
  switch (r) {
    case Reason::finite: return "finite";
    case Reason::support_violation: return "support_violation";
    case Reason::ladder_divergent: return "ladder_divergent";
    case Reason::endpoint_convention: return "endpoint_convention";
    case Reason::not_evaluated: return "not_evaluated";
  }
  return "unknown";
}

// A value in R u {-inf, +inf} tagged with the reason it is infinite.
struct ExtendedValue {
  double value = std::numeric_limits<double>::quiet_NaN();
  Reason reason = Reason::not_evaluated;

  static ExtendedValue finite(double v) { return {v, Reason::finite}; }
  static ExtendedValue pos_inf(Reason why) {
    return {std::numeric_limits<double>::infinity(), why};
  }
  static ExtendedValue neg_inf(Reason why) {
    return {-std::numeric_limits<double>::infinity(), why};
  }

  bool is_finite() const { return std::isfinite(value); }
  bool is_pos_inf() const {
    return std::isinf(value) && value > 0;
  }
};

// Parameter pair (alpha, z) with alpha > 1, z > 0.  The (inf, inf) corner of
// the parameter domain is served by d_max, not by this type.
struct AlphaZ {
  double alpha;
  double z;

  AlphaZ(double alpha_, double z_) : alpha(alpha_), z(z_) {
    if (!(alpha > 1.0) || !std::isfinite(alpha))
      throw std::invalid_argument("AlphaZ: alpha must be finite and > 1, got " +
                                  std::to_string(alpha_));
    if (!(z > 0.0) || !std::isfinite(z))
      throw std::invalid_argument("AlphaZ: z must be finite and > 0, got " +
                                  std::to_string(z_));
  }

  // Exponents that appear throughout the divergence formulas.
  double a_over_z() const { return alpha / z; }
  double half_sandwich_exp() const { return (1.0 - alpha) / (2.0 * z); }
};

}  // namespace renyi
