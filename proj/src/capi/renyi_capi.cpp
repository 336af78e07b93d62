// extern-C surface of the library: opaque handles, error codes, and a
// thread-local error message.  All exceptions from the core are converted to
// status codes here; no exception crosses the C boundary.

#include "renyi.h"

#include <cstring>
#include <string>

#include "core/discrimination.hpp"
#include "core/divergence.hpp"
#include "core/hoeffding.hpp"
#include "core/truncation.hpp"
#include "core/variational.hpp"

using namespace renyi;

struct renyi_op {
  Mat m;
};
struct renyi_model {
  DiagonalModel model;
};

namespace {

thread_local std::string g_last_error;

renyi_status fail(renyi_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename Fn>
renyi_status guarded(Fn&& fn) {
  try {
    fn();
    return RENYI_OK;
  } catch (const std::invalid_argument& e) {
    return fail(RENYI_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(RENYI_ERR_NUMERIC, e.what());
  }
}

void put(double* slot, double v) { if (slot) *slot = v; }
void put(int* slot, int v) { if (slot) *slot = v; }

void put_ev(const ExtendedValue& ev, double* value, int* reason) {
  put(value, ev.value);
  put(reason, int(ev.reason));
}

const Mat& op_of(const renyi_op* op) {
  if (!op) throw std::invalid_argument("null operator handle");
  return op->m;
}

const DiagonalModel& model_of(const renyi_model* m) {
  if (!m) throw std::invalid_argument("null model handle");
  return m->model;
}

ClassicalPair pair_of(int m, const double* p, const double* q) {
  if (m < 1 || !p || !q) throw std::invalid_argument("bad classical pair");
  ClassicalPair pr;
  pr.p.assign(p, p + m);
  pr.q.assign(q, q + m);
  return pr;
}

}  // namespace

extern "C" {

const char* renyi_last_error(void) { return g_last_error.c_str(); }

renyi_status renyi_op_create(int dim, const double* re, const double* im,
                             renyi_op** out) {
  return guarded([&] {
    if (dim < 1 || !re || !out)
      throw std::invalid_argument("renyi_op_create: bad arguments");
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(i, j) = Cplx(re[i * dim + j], im ? im[i * dim + j] : 0.0);
    if (!is_hermitian(m))
      throw std::invalid_argument("renyi_op_create: matrix is not Hermitian");
    psd_eigenvalues(spectral_decompose(m));  // rejects indefinite input
    *out = new renyi_op{std::move(m)};
  });
}

renyi_status renyi_op_create_diag(int dim, const double* diag, renyi_op** out) {
  return guarded([&] {
    if (dim < 1 || !diag || !out)
      throw std::invalid_argument("renyi_op_create_diag: bad arguments");
    Mat m = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      if (diag[i] < 0.0)
        throw std::invalid_argument("renyi_op_create_diag: negative entry");
      m(i, i) = diag[i];
    }
    *out = new renyi_op{std::move(m)};
  });
}

void renyi_op_destroy(renyi_op* op) { delete op; }

int renyi_op_dim(const renyi_op* op) { return op ? int(op->m.rows()) : 0; }

renyi_status renyi_op_trace(const renyi_op* op, double* out) {
  return guarded([&] { put(out, op_of(op).trace().real()); });
}

renyi_status renyi_model_create(const char* family, double param,
                                const double* values, int n_values,
                                int normalize, renyi_model** out) {
  return guarded([&] {
    if (!family || !out)
      throw std::invalid_argument("renyi_model_create: bad arguments");
    std::string f(family);
    DiagonalModel m = [&] {
      if (f == "power") return DiagonalModel::power(param, normalize != 0);
      if (f == "superpower")
        return DiagonalModel::superpower(param, normalize != 0);
      if (f == "geometric")
        return DiagonalModel::geometric(param, normalize != 0);
      if (f == "finite") {
        if (!values || n_values < 1)
          throw std::invalid_argument("renyi_model_create: finite needs values");
        return DiagonalModel::finite(
            std::vector<double>(values, values + n_values), normalize != 0);
      }
      throw std::invalid_argument("renyi_model_create: unknown family " + f);
    }();
    *out = new renyi_model{std::move(m)};
  });
}

void renyi_model_destroy(renyi_model* m) { delete m; }

renyi_status renyi_model_realize(const renyi_model* m, int level,
                                 renyi_op** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("renyi_model_realize: null out");
    Eigen::VectorXd d = model_of(m).realize(level);
    Mat mat = Mat::Zero(level, level);
    for (int i = 0; i < level; ++i) mat(i, i) = d(i);
    *out = new renyi_op{std::move(mat)};
  });
}

renyi_status renyi_q_alpha_z(const renyi_op* rho, const renyi_op* sigma,
                             double alpha, double z, double* value,
                             int* reason) {
  return guarded([&] {
    put_ev(q_alpha_z(op_of(rho), op_of(sigma), AlphaZ(alpha, z)), value,
           reason);
  });
}

renyi_status renyi_log_q_alpha_z(const renyi_op* rho, const renyi_op* sigma,
                                 double alpha, double z, double* value,
                                 int* reason) {
  return guarded([&] {
    put_ev(log_q_alpha_z(op_of(rho), op_of(sigma), AlphaZ(alpha, z)), value,
           reason);
  });
}

renyi_status renyi_d_alpha_z(const renyi_op* rho, const renyi_op* sigma,
                             double alpha, double z, double* value,
                             int* reason) {
  return guarded([&] {
    put_ev(d_alpha_z(op_of(rho), op_of(sigma), AlphaZ(alpha, z)), value,
           reason);
  });
}

renyi_status renyi_d_tilde(const renyi_op* rho, const renyi_op* sigma,
                           double alpha, double z, double* value, int* reason) {
  return guarded([&] {
    put_ev(d_tilde(op_of(rho), op_of(sigma), AlphaZ(alpha, z)), value, reason);
  });
}

renyi_status renyi_d_max(const renyi_op* rho, const renyi_op* sigma,
                         double* value, int* reason) {
  return guarded([&] { put_ev(d_max(op_of(rho), op_of(sigma)), value, reason); });
}

renyi_status renyi_relative_entropy(const renyi_op* rho, const renyi_op* sigma,
                                    double* value, int* reason) {
  return guarded([&] {
    put_ev(relative_entropy(op_of(rho), op_of(sigma)), value, reason);
  });
}

renyi_status renyi_renyi_entropy(const renyi_op* rho, double alpha,
                                 double* value) {
  return guarded([&] { put(value, renyi_entropy(op_of(rho), alpha)); });
}

namespace {

void put_report(const LadderReport& rep, double* values, int* reasons,
                int* verdict, double* limit, double* est_error) {
  for (size_t i = 0; i < rep.values.size(); ++i) {
    if (values) values[i] = rep.values[i].value;
    if (reasons) reasons[i] = int(rep.values[i].reason);
  }
  put(verdict, int(rep.verdict));
  put(limit, rep.limit);
  put(est_error, rep.est_error);
}

}  // namespace

renyi_status renyi_ladder_models(const renyi_model* rho,
                                 const renyi_model* sigma, double alpha,
                                 double z, const int* levels, int n_levels,
                                 double conv_tol, double div_cap,
                                 double* values, int* reasons, int* verdict,
                                 double* limit, double* est_error) {
  return guarded([&] {
    if (!levels || n_levels < 1)
      throw std::invalid_argument("renyi_ladder_models: empty ladder");
    LadderReport rep = ladder_models(
        model_of(rho), model_of(sigma), AlphaZ(alpha, z),
        std::vector<int>(levels, levels + n_levels), conv_tol, div_cap);
    put_report(rep, values, reasons, verdict, limit, est_error);
  });
}

renyi_status renyi_ladder_matrices(const renyi_op* rho, const renyi_op* sigma,
                                   double alpha, double z, int k_max,
                                   double conv_tol, double div_cap,
                                   double* values, int* reasons, int* n_out,
                                   int* verdict, double* limit,
                                   double* est_error) {
  return guarded([&] {
    LadderReport rep = ladder_matrices(op_of(rho), op_of(sigma),
                                       AlphaZ(alpha, z), k_max, conv_tol,
                                       div_cap);
    put(n_out, int(rep.values.size()));
    put_report(rep, values, reasons, verdict, limit, est_error);
  });
}

renyi_status renyi_var_certificate(const renyi_op* rho, const renyi_op* sigma,
                                   double alpha, double z,
                                   double* best_objective, double* q,
                                   double* gap_rel, int* certified) {
  return guarded([&] {
    AlphaZ p(alpha, z);
    const Mat& r = op_of(rho);
    const Mat& s = op_of(sigma);
    std::vector<Mat> witnesses;
    witnesses.push_back(Mat::Identity(r.rows(), r.cols()));
    witnesses.push_back(optimizer_H_full(r, s, p).H);
    VarCertificate cert = var_certificate(r, s, p, witnesses);
    put(best_objective, cert.best_objective);
    put(q, cert.q);
    put(gap_rel, cert.gap_rel);
    put(certified, cert.certified ? 1 : 0);
  });
}

renyi_status renyi_psi_tilde(const renyi_op* rho, const renyi_op* sigma,
                             double u, double* value, int* reason) {
  return guarded([&] {
    PsiCurve c = psi_curve(op_of(rho), op_of(sigma), {0.0, 1.0});
    put_ev(c.eval(u), value, reason);
  });
}

renyi_status renyi_psi_tilde_model(const renyi_model* rho,
                                   const renyi_model* sigma, double u,
                                   double* value, int* reason) {
  return guarded([&] {
    PsiCurve c = psi_curve_model(model_of(rho), model_of(sigma), {0.0, 1.0});
    put_ev(c.eval(u), value, reason);
  });
}

namespace {

void put_anti(const AntiDivergenceReport& rep, double* h_star, double* h_hat,
              double* argmax_u, int* star_reason, int* hat_reason) {
  put(h_star, rep.H_star.value);
  put(h_hat, rep.H_hat.value);
  put(argmax_u, rep.has_maximizer ? rep.maximizer_u : -1.0);
  put(star_reason, int(rep.H_star.reason));
  put(hat_reason, int(rep.H_hat.reason));
}

}  // namespace

renyi_status renyi_hoeffding(const renyi_op* rho, const renyi_op* sigma,
                             double r, double* h_star, double* h_hat,
                             double* argmax_u, int* star_reason,
                             int* hat_reason) {
  return guarded([&] {
    PsiCurve c = psi_curve(op_of(rho), op_of(sigma), default_u_grid());
    put_anti(hoeffding_anti(c, r), h_star, h_hat, argmax_u, star_reason,
             hat_reason);
  });
}

renyi_status renyi_hoeffding_model(const renyi_model* rho,
                                   const renyi_model* sigma, double r,
                                   double* h_star, double* h_hat,
                                   double* argmax_u, int* star_reason,
                                   int* hat_reason) {
  return guarded([&] {
    PsiCurve c =
        psi_curve_model(model_of(rho), model_of(sigma), default_u_grid());
    put_anti(hoeffding_anti(c, r), h_star, h_hat, argmax_u, star_reason,
             hat_reason);
  });
}

renyi_status renyi_cutoff(const renyi_op* rho, const renyi_op* sigma,
                          double kappa, int* regular, double* value,
                          double* lower, double* upper) {
  return guarded([&] {
    CutoffResult c = cutoff_rate(op_of(rho), op_of(sigma), kappa);
    put(regular, c.regular ? 1 : 0);
    put(value, c.value);
    put(lower, c.lower);
    put(upper, c.upper);
  });
}

renyi_status renyi_np_sweep(int m, const double* p, const double* q, int n,
                            double r, double* gamma, double* beta,
                            double* log_gamma) {
  return guarded([&] {
    NpResult res = np_sweep(pair_of(m, p, q), n, r);
    put(gamma, res.best_gamma);
    put(beta, res.achieved_beta);
    put(log_gamma, res.log_gamma);
  });
}

renyi_status renyi_sc_estimate(int m, const double* p, const double* q,
                               double r, const int* n_grid, int len,
                               double* exponents, double* extrapolated) {
  return guarded([&] {
    if (!n_grid || len < 2)
      throw std::invalid_argument("renyi_sc_estimate: need >= 2 block sizes");
    LadderReport rep = sc_exponent_estimate(
        pair_of(m, p, q), r, std::vector<int>(n_grid, n_grid + len));
    for (size_t i = 0; i < rep.log_values.size(); ++i)
      if (exponents) exponents[i] = rep.log_values[i];
    put(extrapolated, rep.limit);
  });
}

renyi_status renyi_measured_best(const renyi_op* rho, const renyi_op* sigma,
                                 double alpha, int n, uint64_t seed,
                                 double* best, double* gap) {
  return guarded([&] {
    MeasuredBound mb =
        measured_lower_bound(op_of(rho), op_of(sigma), alpha, n, seed);
    put(best, mb.best);
    put(gap, mb.gap);
  });
}

renyi_status renyi_dpi_trial(const renyi_op* rho, const renyi_op* sigma,
                             double alpha, int d_out, int n_kraus,
                             uint64_t seed, double* d_before, double* d_after,
                             int* ok) {
  return guarded([&] {
    const Mat& r = op_of(rho);
    const Mat& s = op_of(sigma);
    Channel ch = random_channel(int(r.rows()), d_out, n_kraus, seed);
    ExtendedValue before = d_sandwiched(r, s, alpha);
    ExtendedValue after =
        d_sandwiched(ch.dual_apply(r), ch.dual_apply(s), alpha);
    put(d_before, before.value);
    put(d_after, after.value);
    put(ok, dpi_check(ch, r, s, alpha) ? 1 : 0);
  });
}

}  // extern "C"
