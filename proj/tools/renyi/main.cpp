// renyi -- command-line front end of the renyi-lab library.
//
// Usage: renyi <command> --scenario <path> [--out dir] [--bits] [--seed k]
//              [--tol x]
// Commands: compute, ladder, variational, hoeffding, cutoff, simulate,
//           measured, dpi, report.
//
// Scenario files are JSON (see README for the schema).  Each command writes a
// CSV file with a fixed header plus a JSON sidecar carrying full-precision
// values and provenance.  Exit codes: 0 success, 2 malformed scenario,
// 3 numerical failure.
//
// This tool talks to the library exclusively through the C API in renyi.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "renyi.h"

using json = nlohmann::json;

namespace {

constexpr int kExitBadScenario = 2;
constexpr int kExitNumeric = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void bail(int code, const std::string& msg) {
  throw CliError{code, msg};
}

void check(renyi_status st, const std::string& where) {
  if (st == RENYI_OK) return;
  int code = (st == RENYI_ERR_INVALID) ? kExitBadScenario : kExitNumeric;
  bail(code, where + ": " + renyi_last_error());
}

// ---- scenario ------------------------------------------------------------

struct OpHandle {
  std::unique_ptr<renyi_op, decltype(&renyi_op_destroy)> op{nullptr,
                                                            renyi_op_destroy};
  std::unique_ptr<renyi_model, decltype(&renyi_model_destroy)> model{
      nullptr, renyi_model_destroy};
  bool is_model() const { return model != nullptr; }
};

struct Scenario {
  std::string name;
  json raw;
  OpHandle rho, sigma;
  std::vector<double> alphas{2.0};
  std::vector<double> zs;  // empty => z = alpha per entry
  std::vector<double> u_grid;
  std::vector<double> r_grid{0.05, 0.1, 0.2, 0.4};
  std::vector<double> kappas{0.5};
  std::vector<int> levels;           // ladder levels (models)
  std::vector<int> n_grid{250, 500, 1000, 2000};
  std::vector<double> p, q;          // classical pair for simulate
  int copies = 2;
  int trials = 20;
  int d_out = 2;
  int n_kraus = 4;
  int realize_level = 256;
  uint64_t seed = 1;
  double tol = 1e-6;
};

std::vector<double> as_doubles(const json& j, const std::string& field) {
  if (!j.is_array()) bail(kExitBadScenario, field + ": expected an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) bail(kExitBadScenario, field + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

OpHandle parse_operator(const json& spec, const std::string& field) {
  OpHandle h;
  if (!spec.is_object()) bail(kExitBadScenario, field + ": expected an object");
  if (spec.contains("diag")) {
    std::vector<double> d = as_doubles(spec["diag"], field + ".diag");
    renyi_op* op = nullptr;
    check(renyi_op_create_diag(int(d.size()), d.data(), &op), field);
    h.op.reset(op);
    return h;
  }
  if (spec.contains("matrix")) {
    const json& m = spec["matrix"];
    if (!m.contains("re")) bail(kExitBadScenario, field + ".matrix: missing re");
    const json& re = m["re"];
    int dim = int(re.size());
    std::vector<double> re_flat, im_flat;
    auto flatten = [&](const json& rows, std::vector<double>& out) {
      if (int(rows.size()) != dim)
        bail(kExitBadScenario, field + ".matrix: ragged matrix");
      for (const auto& row : rows) {
        if (int(row.size()) != dim)
          bail(kExitBadScenario, field + ".matrix: ragged matrix");
        for (const auto& v : row) out.push_back(v.get<double>());
      }
    };
    flatten(re, re_flat);
    if (m.contains("im")) flatten(m["im"], im_flat);
    renyi_op* op = nullptr;
    check(renyi_op_create(dim, re_flat.data(),
                          im_flat.empty() ? nullptr : im_flat.data(), &op),
          field);
    h.op.reset(op);
    return h;
  }
  if (spec.contains("model")) {
    const json& m = spec["model"];
    std::string family = m.value("family", "");
    double param = 0.0;
    if (m.contains("beta")) param = m["beta"].get<double>();
    if (m.contains("gamma")) param = m["gamma"].get<double>();
    if (m.contains("r")) param = m["r"].get<double>();
    if (m.contains("param")) param = m["param"].get<double>();
    std::vector<double> values;
    if (m.contains("values")) values = as_doubles(m["values"], field);
    bool normalize = m.value("normalize", true);
    renyi_model* mod = nullptr;
    check(renyi_model_create(family.c_str(), param,
                             values.empty() ? nullptr : values.data(),
                             int(values.size()), normalize ? 1 : 0, &mod),
          field);
    h.model.reset(mod);
    return h;
  }
  bail(kExitBadScenario, field + ": need one of diag / matrix / model");
}

Scenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) bail(kExitBadScenario, "cannot open scenario file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bail(kExitBadScenario, std::string("scenario parse error: ") + e.what());
  }
  Scenario sc;
  sc.raw = j;
  sc.name = j.value("name", "scenario");
  if (j.contains("rho")) sc.rho = parse_operator(j["rho"], "rho");
  if (j.contains("sigma")) sc.sigma = parse_operator(j["sigma"], "sigma");
  const json params = j.value("params", json::object());
  if (params.contains("alpha")) sc.alphas = as_doubles(params["alpha"], "alpha");
  if (params.contains("z")) sc.zs = as_doubles(params["z"], "z");
  if (params.contains("u_grid")) sc.u_grid = as_doubles(params["u_grid"], "u_grid");
  if (params.contains("r_grid")) sc.r_grid = as_doubles(params["r_grid"], "r_grid");
  if (params.contains("kappa")) sc.kappas = as_doubles(params["kappa"], "kappa");
  if (params.contains("levels")) {
    for (double v : as_doubles(params["levels"], "levels"))
      sc.levels.push_back(int(v));
  }
  if (params.contains("n_grid")) {
    sc.n_grid.clear();
    for (double v : as_doubles(params["n_grid"], "n_grid"))
      sc.n_grid.push_back(int(v));
  }
  if (params.contains("p")) sc.p = as_doubles(params["p"], "p");
  if (params.contains("q")) sc.q = as_doubles(params["q"], "q");
  sc.copies = params.value("copies", sc.copies);
  sc.trials = params.value("trials", sc.trials);
  sc.d_out = params.value("d_out", sc.d_out);
  sc.n_kraus = params.value("n_kraus", sc.n_kraus);
  sc.realize_level = params.value("realize_level", sc.realize_level);
  sc.seed = params.value("seed", sc.seed);
  sc.tol = params.value("tol", sc.tol);
  if (sc.levels.empty())
    for (int k = 1; k <= 12; ++k) sc.levels.push_back(1 << k);
  return sc;
}

// Matrix handles for commands that need them; models are realized at
// realize_level.
renyi_op* matrix_of(const OpHandle& h, int realize_level,
                    const std::string& field, OpHandle& storage) {
  if (h.op) return h.op.get();
  if (h.model) {
    renyi_op* op = nullptr;
    check(renyi_model_realize(h.model.get(), realize_level, &op), field);
    storage.op.reset(op);
    return op;
  }
  bail(kExitBadScenario, field + ": operator missing from scenario");
}

// ---- output ---------------------------------------------------------------

struct Output {
  std::string csv_path, json_path;
  std::ostringstream csv;
  json sidecar;

  // Full-precision value as a JSON-friendly token (infinities as strings so
  // the sidecar reloads losslessly).
  static json jnum(double v) {
    if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
    if (std::isnan(v)) return json("nan");
    return json(v);
  }

  static std::string fnum(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
  }

  void write() const {
    {
      std::ofstream f(csv_path);
      if (!f) bail(kExitNumeric, "cannot write " + csv_path);
      f << csv.str();
    }
    {
      std::ofstream f(json_path);
      if (!f) bail(kExitNumeric, "cannot write " + json_path);
      f << sidecar.dump(2) << "\n";
    }
  }
};

const char* reason_str(int reason) {
  switch (reason) {
    case RENYI_FINITE: return "finite";
    case RENYI_SUPPORT_VIOLATION: return "support_violation";
    case RENYI_LADDER_DIVERGENT: return "ladder_divergent";
    case RENYI_ENDPOINT_CONVENTION: return "endpoint_convention";
    default: return "not_evaluated";
  }
}

const char* verdict_str(int v) {
  switch (v) {
    case RENYI_VERDICT_CONVERGED: return "converged";
    case RENYI_VERDICT_DIVERGING: return "diverging";
    default: return "inconclusive";
  }
}

struct Context {
  Scenario sc;
  std::string out_dir = ".";
  bool bits = false;
  // Logarithmic quantities are rescaled to bits at output only.
  double log_scale() const { return bits ? 1.0 / std::log(2.0) : 1.0; }
  Output make_output(const std::string& command) const {
    Output o;
    o.csv_path = out_dir + "/" + sc.name + "_" + command + ".csv";
    o.json_path = out_dir + "/" + sc.name + "_" + command + ".json";
    o.sidecar["scenario"] = sc.name;
    o.sidecar["command"] = command;
    o.sidecar["units"] = bits ? "bits" : "nats";
    o.sidecar["seed"] = sc.seed;
    o.sidecar["rows"] = json::array();
    return o;
  }
};

std::vector<std::pair<double, double>> alpha_z_pairs(const Scenario& sc) {
  std::vector<std::pair<double, double>> out;
  for (double a : sc.alphas) {
    if (sc.zs.empty()) {
      out.emplace_back(a, a);
    } else {
      for (double z : sc.zs) out.emplace_back(a, z);
    }
  }
  return out;
}

// ---- commands --------------------------------------------------------------

int cmd_compute(Context& ctx) {
  OpHandle rs, ss;
  renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
  renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  Output out = ctx.make_output("compute");
  out.csv << "alpha,z,Q,D,D_tilde,status\n";
  const double s = ctx.log_scale();
  for (auto [a, z] : alpha_z_pairs(ctx.sc)) {
    double qv = 0, dv = 0, dtv = 0;
    int reason = 0, r2 = 0, r3 = 0;
    check(renyi_q_alpha_z(rho, sigma, a, z, &qv, &reason), "compute/Q");
    check(renyi_d_alpha_z(rho, sigma, a, z, &dv, &r2), "compute/D");
    check(renyi_d_tilde(rho, sigma, a, z, &dtv, &r3), "compute/D_tilde");
    if (std::isnan(qv) || std::isnan(dv))
      bail(kExitNumeric, "compute: objective NaN");
    out.csv << Output::fnum(a) << ',' << Output::fnum(z) << ','
            << Output::fnum(qv) << ',' << Output::fnum(dv * s) << ','
            << Output::fnum(dtv * s) << ',' << reason_str(reason) << '\n';
    out.sidecar["rows"].push_back(json{{"alpha", a},
                                       {"z", z},
                                       {"Q", Output::jnum(qv)},
                                       {"D", Output::jnum(dv * s)},
                                       {"D_tilde", Output::jnum(dtv * s)},
                                       {"status", reason_str(reason)}});
  }
  out.write();
  return 0;
}

int cmd_ladder(Context& ctx) {
  Output out = ctx.make_output("ladder");
  out.csv << "level,value,status\n";
  auto [a, z] = alpha_z_pairs(ctx.sc).front();
  int verdict = 0;
  double limit = 0, est_error = 0;
  std::vector<double> values;
  std::vector<int> reasons;
  std::vector<double> levels;
  if (ctx.sc.rho.is_model() && ctx.sc.sigma.is_model()) {
    int n = int(ctx.sc.levels.size());
    values.resize(size_t(n));
    reasons.resize(size_t(n));
    check(renyi_ladder_models(ctx.sc.rho.model.get(), ctx.sc.sigma.model.get(),
                              a, z, ctx.sc.levels.data(), n, ctx.sc.tol, 1e12,
                              values.data(), reasons.data(), &verdict, &limit,
                              &est_error),
          "ladder");
    for (int lev : ctx.sc.levels) levels.push_back(double(lev));
  } else {
    OpHandle rs, ss;
    renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
    renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
    int k_max = 12, n_out = 0;
    values.resize(size_t(k_max));
    reasons.resize(size_t(k_max));
    check(renyi_ladder_matrices(rho, sigma, a, z, k_max, ctx.sc.tol, 1e12,
                                values.data(), reasons.data(), &n_out,
                                &verdict, &limit, &est_error),
          "ladder");
    values.resize(size_t(n_out));
    reasons.resize(size_t(n_out));
    for (int k = 1; k <= n_out; ++k) levels.push_back(double(k));
  }
  for (size_t i = 0; i < values.size(); ++i) {
    out.csv << Output::fnum(levels[i]) << ',' << Output::fnum(values[i]) << ','
            << reason_str(reasons[i]) << '\n';
    out.sidecar["rows"].push_back(json{{"level", levels[i]},
                                       {"value", Output::jnum(values[i])},
                                       {"status", reason_str(reasons[i])}});
  }
  out.sidecar["verdict"] = verdict_str(verdict);
  out.sidecar["limit"] = Output::jnum(limit);
  out.sidecar["est_error"] = Output::jnum(est_error);
  out.sidecar["alpha"] = a;
  out.sidecar["z"] = z;
  out.write();
  return 0;
}

int cmd_variational(Context& ctx) {
  OpHandle rs, ss;
  renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
  renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  Output out = ctx.make_output("variational");
  out.csv << "alpha,z,objective,Q,gap,certified\n";
  for (auto [a, z] : alpha_z_pairs(ctx.sc)) {
    double best = 0, q = 0, gap = 0;
    int certified = 0;
    check(renyi_var_certificate(rho, sigma, a, z, &best, &q, &gap, &certified),
          "variational");
    out.csv << Output::fnum(a) << ',' << Output::fnum(z) << ','
            << Output::fnum(best) << ',' << Output::fnum(q) << ','
            << Output::fnum(gap) << ',' << (certified ? "true" : "false")
            << '\n';
    out.sidecar["rows"].push_back(json{{"alpha", a},
                                       {"z", z},
                                       {"objective", Output::jnum(best)},
                                       {"Q", Output::jnum(q)},
                                       {"gap", Output::jnum(gap)},
                                       {"certified", certified != 0}});
  }
  out.write();
  return 0;
}

int cmd_hoeffding(Context& ctx) {
  Output out = ctx.make_output("hoeffding");
  out.csv << "r,H_star,H_hat,argmax_u\n";
  const double s = ctx.log_scale();
  const bool models =
      ctx.sc.rho.is_model() && ctx.sc.sigma.is_model();
  OpHandle rs, ss;
  renyi_op* rho = nullptr;
  renyi_op* sigma = nullptr;
  if (!models) {
    rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
    sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  }
  for (double r : ctx.sc.r_grid) {
    double h_star = 0, h_hat = 0, u = 0;
    int sr = 0, hr = 0;
    if (models) {
      check(renyi_hoeffding_model(ctx.sc.rho.model.get(),
                                  ctx.sc.sigma.model.get(), r, &h_star, &h_hat,
                                  &u, &sr, &hr),
            "hoeffding");
    } else {
      check(renyi_hoeffding(rho, sigma, r, &h_star, &h_hat, &u, &sr, &hr),
            "hoeffding");
    }
    out.csv << Output::fnum(r * s) << ',' << Output::fnum(h_star * s) << ','
            << Output::fnum(h_hat * s) << ',' << Output::fnum(u) << '\n';
    out.sidecar["rows"].push_back(json{{"r", r * s},
                                       {"H_star", Output::jnum(h_star * s)},
                                       {"H_hat", Output::jnum(h_hat * s)},
                                       {"argmax_u", u}});
  }
  out.write();
  return 0;
}

int cmd_cutoff(Context& ctx) {
  OpHandle rs, ss;
  renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
  renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  Output out = ctx.make_output("cutoff");
  out.csv << "kappa,regular,value,lower,upper\n";
  const double s = ctx.log_scale();
  for (double k : ctx.sc.kappas) {
    int regular = 0;
    double value = 0, lower = 0, upper = 0;
    check(renyi_cutoff(rho, sigma, k, &regular, &value, &lower, &upper),
          "cutoff");
    out.csv << Output::fnum(k) << ',' << (regular ? "true" : "false") << ','
            << Output::fnum(value * s) << ',' << Output::fnum(lower * s) << ','
            << Output::fnum(upper * s) << '\n';
    out.sidecar["rows"].push_back(json{{"kappa", k},
                                       {"regular", regular != 0},
                                       {"value", Output::jnum(value * s)},
                                       {"lower", Output::jnum(lower * s)},
                                       {"upper", Output::jnum(upper * s)}});
  }
  out.write();
  return 0;
}

int cmd_simulate(Context& ctx) {
  // Classical pair: explicit p/q params, or the diagonals of rho/sigma.
  std::vector<double> p = ctx.sc.p, q = ctx.sc.q;
  if (p.empty() || q.empty())
    bail(kExitBadScenario, "simulate: params.p and params.q are required");
  if (p.size() != q.size())
    bail(kExitBadScenario, "simulate: p and q must have equal length");
  const int m = int(p.size());
  Output out = ctx.make_output("simulate");
  out.csv << "n,r,exponent,prediction,gap\n";
  const double s = ctx.log_scale();

  // Prediction: Hoeffding anti-divergence of the commuting (diagonal) pair.
  renyi_op *rho_d = nullptr, *sigma_d = nullptr;
  check(renyi_op_create_diag(m, p.data(), &rho_d), "simulate/rho");
  check(renyi_op_create_diag(m, q.data(), &sigma_d), "simulate/sigma");
  std::unique_ptr<renyi_op, decltype(&renyi_op_destroy)> rguard(
      rho_d, renyi_op_destroy),
      sguard(sigma_d, renyi_op_destroy);

  for (double r : ctx.sc.r_grid) {
    double h_star = 0, h_hat = 0, u = 0;
    int sr = 0, hr = 0;
    check(renyi_hoeffding(rho_d, sigma_d, r, &h_star, &h_hat, &u, &sr, &hr),
          "simulate/prediction");
    std::vector<double> exps(ctx.sc.n_grid.size(), 0.0);
    double extrap = 0;
    check(renyi_sc_estimate(m, p.data(), q.data(), r, ctx.sc.n_grid.data(),
                            int(ctx.sc.n_grid.size()), exps.data(), &extrap),
          "simulate/np");
    for (size_t i = 0; i < ctx.sc.n_grid.size(); ++i) {
      double gap = std::abs(exps[i] - h_hat);
      out.csv << ctx.sc.n_grid[i] << ',' << Output::fnum(r * s) << ','
              << Output::fnum(exps[i] * s) << ',' << Output::fnum(h_hat * s)
              << ',' << Output::fnum(gap * s) << '\n';
      out.sidecar["rows"].push_back(
          json{{"n", ctx.sc.n_grid[i]},
               {"r", r * s},
               {"exponent", Output::jnum(exps[i] * s)},
               {"prediction", Output::jnum(h_hat * s)},
               {"gap", Output::jnum(gap * s)}});
    }
    out.sidecar["extrapolated"].push_back(
        json{{"r", r * s}, {"value", Output::jnum(extrap * s)}});
  }
  out.write();
  return 0;
}

int cmd_measured(Context& ctx) {
  OpHandle rs, ss;
  renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
  renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  Output out = ctx.make_output("measured");
  out.csv << "alpha,n,best,target,gap\n";
  const double s = ctx.log_scale();
  for (double a : ctx.sc.alphas) {
    double best = 0, gap = 0, target = 0;
    int reason = 0;
    check(renyi_measured_best(rho, sigma, a, ctx.sc.copies, ctx.sc.seed, &best,
                              &gap),
          "measured");
    check(renyi_d_alpha_z(rho, sigma, a, a, &target, &reason),
          "measured/target");
    out.csv << Output::fnum(a) << ',' << ctx.sc.copies << ','
            << Output::fnum(best * s) << ',' << Output::fnum(target * s) << ','
            << Output::fnum(gap * s) << '\n';
    out.sidecar["rows"].push_back(json{{"alpha", a},
                                       {"n", ctx.sc.copies},
                                       {"best", Output::jnum(best * s)},
                                       {"target", Output::jnum(target * s)},
                                       {"gap", Output::jnum(gap * s)}});
  }
  out.write();
  return 0;
}

int cmd_dpi(Context& ctx) {
  OpHandle rs, ss;
  renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
  renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  Output out = ctx.make_output("dpi");
  out.csv << "trial,alpha,d_before,d_after,ok\n";
  const double s = ctx.log_scale();
  for (int t = 0; t < ctx.sc.trials; ++t) {
    for (double a : ctx.sc.alphas) {
      double before = 0, after = 0;
      int ok = 0;
      check(renyi_dpi_trial(rho, sigma, a, ctx.sc.d_out, ctx.sc.n_kraus,
                            ctx.sc.seed + uint64_t(t), &before, &after, &ok),
            "dpi");
      out.csv << t << ',' << Output::fnum(a) << ',' << Output::fnum(before * s)
              << ',' << Output::fnum(after * s) << ','
              << (ok ? "true" : "false") << '\n';
      out.sidecar["rows"].push_back(json{{"trial", t},
                                         {"alpha", a},
                                         {"d_before", Output::jnum(before * s)},
                                         {"d_after", Output::jnum(after * s)},
                                         {"ok", ok != 0}});
    }
  }
  out.write();
  return 0;
}

int cmd_report(Context& ctx) {
  OpHandle rs, ss;
  renyi_op* rho = matrix_of(ctx.sc.rho, ctx.sc.realize_level, "rho", rs);
  renyi_op* sigma = matrix_of(ctx.sc.sigma, ctx.sc.realize_level, "sigma", ss);
  Output out = ctx.make_output("report");
  out.csv << "quantity,value,status\n";
  const double s = ctx.log_scale();
  auto row = [&](const std::string& name, double v, int reason) {
    out.csv << name << ',' << Output::fnum(v) << ',' << reason_str(reason)
            << '\n';
    out.sidecar["rows"].push_back(
        json{{"quantity", name}, {"value", Output::jnum(v)},
             {"status", reason_str(reason)}});
  };
  double tr = 0;
  check(renyi_op_trace(rho, &tr), "report");
  row("trace_rho", tr, RENYI_FINITE);
  check(renyi_op_trace(sigma, &tr), "report");
  row("trace_sigma", tr, RENYI_FINITE);
  double v = 0;
  int reason = 0;
  check(renyi_d_max(rho, sigma, &v, &reason), "report/d_max");
  row("d_max", v * s, reason);
  check(renyi_relative_entropy(rho, sigma, &v, &reason), "report/relentr");
  row("relative_entropy", v * s, reason);
  for (auto [a, z] : alpha_z_pairs(ctx.sc)) {
    check(renyi_d_alpha_z(rho, sigma, a, z, &v, &reason), "report/D");
    char name[64];
    std::snprintf(name, sizeof(name), "D_alpha=%g_z=%g", a, z);
    row(name, v * s, reason);
  }
  out.write();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"renyi-lab: Renyi (alpha,z)-divergences and error exponents"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = ".";
  bool bits = false;
  uint64_t seed_override = 0;
  double tol_override = 0.0;
  bool has_seed = false, has_tol = false;

  const std::vector<std::string> commands = {
      "compute", "ladder",   "variational", "hoeffding", "cutoff",
      "simulate", "measured", "dpi",        "report"};
  for (const std::string& c : commands) {
    CLI::App* sub = app.add_subcommand(c);
    sub->add_option("--scenario", scenario_path, "scenario JSON file")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_flag("--bits", bits, "report logarithmic quantities in bits");
    sub->add_option("--seed", seed_override, "override the scenario seed")
        ->each([&](const std::string&) { has_seed = true; });
    sub->add_option("--tol", tol_override, "override the scenario tolerance")
        ->each([&](const std::string&) { has_tol = true; });
  }

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  try {
    Context ctx;
    ctx.sc = parse_scenario(scenario_path);
    ctx.out_dir = out_dir;
    ctx.bits = bits;
    if (has_seed) ctx.sc.seed = seed_override;
    if (has_tol) ctx.sc.tol = tol_override;

    if (command == "compute") return cmd_compute(ctx);
    if (command == "ladder") return cmd_ladder(ctx);
    if (command == "variational") return cmd_variational(ctx);
    if (command == "hoeffding") return cmd_hoeffding(ctx);
    if (command == "cutoff") return cmd_cutoff(ctx);
    if (command == "simulate") return cmd_simulate(ctx);
    if (command == "measured") return cmd_measured(ctx);
    if (command == "dpi") return cmd_dpi(ctx);
    if (command == "report") return cmd_report(ctx);
    std::fprintf(stderr, "unknown command %s\n", command.c_str());
    return kExitBadScenario;
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }
}
