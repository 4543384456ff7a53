// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: analytic, quadrature, and Monte-Carlo views of
// the stationary Move-to-Front search-cost distribution under normalized
// subordinator increment weights.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtfcost/analytic.hpp"
#include "mtfcost/errors.hpp"
#include "mtfcost/json_io.hpp"
#include "mtfcost/quad.hpp"
#include "mtfcost/rng.hpp"
#include "mtfcost/sim.hpp"
#include "mtfcost/special_fn.hpp"
#include "mtfcost/version.hpp"

using nlohmann::json;
using nlohmann::ordered_json;
using namespace mtfcost;

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
bool is_set(double v) { return !std::isnan(v); }

std::string fmt17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::uint64_t parse_u64(const std::string& text) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(text, &pos);
    if (pos == text.size()) return v;
  } catch (...) {
  }
  // Scientific notation (1e6) falls back to a double parse.
  std::size_t pos = 0;
  const double d = std::stod(text, &pos);
  if (pos != text.size() || !(d >= 0.0) || d > 1.8e19) {
    throw std::invalid_argument("cannot parse integer value: " + text);
  }
  return static_cast<std::uint64_t>(std::llround(d));
}

// ---------------------------------------------------------------------
// Flag bundles

struct ModelFlags {
  std::string model;
  double gamma = kUnset, u = kUnset, theta = kUnset, mass = kUnset;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--model", model, "Weight model: gamma|stable|gg|py")
        ->required();
    cmd->add_option("--gamma", gamma, "Stability index in (0,1)");
    cmd->add_option("--u", u, "Tempering parameter u >= 0 (gg only)");
    cmd->add_option("--theta", theta, "Total-mass parameter theta > 0");
    cmd->add_option("--mass", mass, "Time-scaling multiplier (gg/stable)");
  }

  Model build() const {
    auto need = [&](double v, const char* name) {
      if (!is_set(v)) {
        throw std::invalid_argument(std::string("--model ") + model +
                                    " requires --" + name);
      }
      return v;
    };
    auto forbid = [&](double v, const char* name) {
      if (is_set(v)) {
        throw std::invalid_argument(std::string("--") + name +
                                    " conflicts with --model " + model);
      }
    };
    if (model == "stable") {
      forbid(theta, "theta");
      forbid(u, "u");
      return StableExponent(need(gamma, "gamma"), is_set(mass) ? mass : 1.0);
    }
    if (model == "gg") {
      forbid(theta, "theta");
      return GenGammaExponent(need(gamma, "gamma"), is_set(u) ? u : 0.0,
                              is_set(mass) ? mass : 1.0);
    }
    if (model == "gamma") {
      forbid(gamma, "gamma");
      forbid(u, "u");
      forbid(mass, "mass");
      return DirichletModel(need(theta, "theta"));
    }
    if (model == "py") {
      forbid(u, "u");
      forbid(mass, "mass");
      return PitmanYorModel(need(gamma, "gamma"), need(theta, "theta"));
    }
    throw std::invalid_argument("unknown --model: " + model);
  }
};

struct QuadFlags {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdiv = 2000;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");
    cmd->add_option("--abs-tol", abs_tol, "Quadrature absolute tolerance");
    cmd->add_option("--max-subdiv", max_subdiv, "Adaptive subdivision budget");
  }

  QuadSpec spec() const {
    if (!(rel_tol > 0) || !(abs_tol > 0) || max_subdiv < 10) {
      throw std::invalid_argument("invalid quadrature tolerances");
    }
    return QuadSpec{rel_tol, abs_tol, max_subdiv};
  }
};

struct SimFlags {
  std::string reps = "10000";
  std::string seed;      // empty = env fallback, then fresh
  std::string burn_in;   // empty = default 50 n ln n
  int workers = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--reps", reps, "Replication count (scientific ok)");
    cmd->add_option("--seed", seed, "RNG seed (64-bit unsigned)");
    cmd->add_option("--workers", workers, "Worker thread count");
    cmd->add_option("--burn-in", burn_in, "Chain-engine burn-in requests");
  }

  SimConfig config(bool& seed_generated) const {
    SimConfig cfg;
    cfg.replications = parse_u64(reps);
    cfg.workers = workers;
    cfg.burn_in = burn_in.empty() ? 0 : parse_u64(burn_in);
    seed_generated = false;
    if (!seed.empty()) {
      cfg.seed = parse_u64(seed);
    } else if (const char* env = std::getenv("MTFCOST_SEED")) {
      cfg.seed = parse_u64(env);
    } else {
      std::random_device rd;
      cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
      seed_generated = true;
    }
    return cfg;
  }
};

// ---------------------------------------------------------------------
// Output plumbing

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

void write_manifest(const std::string& prefix, const std::string& command,
                    const ordered_json& parameters,
                    const std::vector<std::string>& outputs) {
  ordered_json manifest;
  manifest["command"] = command;
  manifest["parameters"] = parameters;
  manifest["library_version"] = kVersion;
  manifest["created_utc"] = iso8601_now();
  manifest["outputs"] = outputs;
  write_text_file(prefix + ".manifest.json", manifest.dump(2) + "\n");
}

void emit(const std::string& out_prefix, const std::string& command,
          const ordered_json& parameters, const std::string& suffix,
          const std::string& content) {
  if (out_prefix.empty()) {
    std::cout << content;
    return;
  }
  const std::string path = out_prefix + suffix;
  write_text_file(path, content);
  write_manifest(out_prefix, command, parameters, {path});
  std::cerr << "wrote " << path << "\n";
}

std::vector<double> parse_grid(const std::string& csv_list, double lo,
                               double hi, int count) {
  std::vector<double> grid;
  if (!csv_list.empty()) {
    std::stringstream ss(csv_list);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
    return grid;
  }
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (count == 1) return {lo};
  for (int i = 0; i < count; ++i) {
    grid.push_back(lo + (hi - lo) * i / (count - 1));
  }
  return grid;
}

// ---------------------------------------------------------------------
// Pitman-Yor transforms by marginalizing the Gamma(theta/gamma, 1)
// mixing variable over the conditional generalized gamma transform.

double py_marginal(const PitmanYorModel& py, const QuadSpec& spec,
                   const std::function<double(const LaplaceExponent&)>& inner) {
  const double a = py.theta() / py.gamma();
  const double lg = log_gamma(a);
  const double cut = a + 25.0 * std::sqrt(a) + 45.0;
  QuadSpec outer = spec;
  outer.rel_tol = std::max(spec.rel_tol, 1e-7);
  const QuadResult r = integrate_gk(
      [&](double z) {
        const double logw = (a - 1.0) * std::log(z) - z - lg;
        if (logw < -745.0) return 0.0;
        return std::exp(logw) *
               inner(LaplaceExponent(py.conditional_exponent(z)));
      },
      0.0, cut, outer);
  return r.value;
}

// ---------------------------------------------------------------------
// moments

struct MomentsCmd {
  ModelFlags model;
  QuadFlags quad;
  SimFlags sim;
  int k = 1;
  bool verify = false;
  bool simulate = false;
  std::string out_prefix;

  int run() {
    const Model m = model.build();
    const MomentValue mv = limit_moment(MomentRequest{m, k});

    ordered_json report;
    report["finite"] = mv.finite;
    if (mv.finite) {
      report["value"] = mv.value;
    } else {
      report["value"] = nullptr;
    }
    report["psi_terms"] = json::array();
    for (double t : mv.psi_terms) {
      if (std::isinf(t)) {
        report["psi_terms"].push_back(nullptr);
      } else {
        report["psi_terms"].push_back(t);
      }
    }
    // Both candidate finiteness thresholds for standalone Psi(l): the
    // moment assembly uses gamma < 1/(k+1); the integral for Psi(l)
    // alone converges already for gamma < 1/(l+1).
    report["gamma_threshold_k"] = finiteness_threshold(k);
    {
      json per_l = json::array();
      for (int l = 1; l <= k; ++l) per_l.push_back(finiteness_threshold(l));
      report["gamma_threshold_l"] = per_l;
    }
    report["model"] = model_to_json(m);
    report["k"] = k;

    if (verify) {
      const QuadSpec spec = quad.spec();
      json terms = json::array();
      for (int l = 1; l <= k; ++l) {
        json entry;
        entry["l"] = l;
        const double closed = mv.psi_terms[static_cast<std::size_t>(l - 1)];
        if (std::isinf(closed)) {
          entry["skipped_divergent"] = true;
          terms.push_back(entry);
          continue;
        }
        double numeric;
        if (const auto* py = std::get_if<PitmanYorModel>(&m)) {
          numeric = py_marginal(*py, spec, [&](const LaplaceExponent& e) {
            return psi_l_numeric(e, l, spec);
          });
        } else {
          numeric = psi_l_numeric(*model_exponent(m), l, spec);
        }
        entry["quadrature"] = numeric;
        entry["closed_form"] = closed;
        entry["rel_error"] = std::abs(numeric - closed) /
                             std::max(std::abs(closed), 1e-300);
        terms.push_back(entry);
      }
      report["verification"] = terms;
    }

    if (simulate) {
      bool generated = false;
      const SimConfig cfg = sim.config(generated);
      const auto draws = run_limit(m, cfg);
      const auto moments = estimate_moments(draws, k);
      json mj = json::array();
      for (const auto& est : moments) {
        mj.push_back({{"order", est.order},
                      {"estimate", est.value},
                      {"std_error", est.std_error}});
      }
      report["simulation"] = {{"replications", cfg.replications},
                              {"seed", cfg.seed},
                              {"seed_generated", generated},
                              {"workers", cfg.workers},
                              {"moments", mj}};
    }

    emit(out_prefix, "moments", report, ".moments.json", report.dump(2) + "\n");
    return 0;
  }
};

// ---------------------------------------------------------------------
// laplace

struct LaplaceCmd {
  ModelFlags model;
  QuadFlags quad;
  SimFlags sim;
  std::string s_list;
  double s_min = 0.0, s_max = 5.0;
  int s_count = 11;
  int n = -1;
  bool limit = false;
  bool monte_carlo = false;
  std::string out_prefix;

  int run() {
    const Model m = model.build();
    if ((n > 0) == limit) {
      throw std::invalid_argument("laplace: give exactly one of --n or --limit");
    }
    const QuadSpec spec = quad.spec();
    const std::vector<double> grid = parse_grid(s_list, s_min, s_max, s_count);
    if (grid.empty()) throw std::invalid_argument("laplace: empty s grid");
    for (double s : grid) {
      if (!(s >= 0.0)) throw std::invalid_argument("laplace: s must be >= 0");
    }

    auto transform_at = [&](double s) {
      if (const auto* py = std::get_if<PitmanYorModel>(&m)) {
        return py_marginal(*py, spec, [&](const LaplaceExponent& e) {
          return limit ? laplace_limit(e, s, spec)
                       : laplace_finite_n(e, n, s, spec);
        });
      }
      const LaplaceExponent e = *model_exponent(m);
      return limit ? laplace_limit(e, s, spec) : laplace_finite_n(e, n, s, spec);
    };

    std::vector<std::uint64_t> draws;
    SimConfig cfg;
    bool generated = false;
    if (monte_carlo) {
      cfg = sim.config(generated);
      draws = limit ? run_limit(m, cfg)
                    : run_finite_n(m, n, FiniteEngine::kExact, cfg);
    }

    std::string csv = monte_carlo ? "s,phi,phi_mc,mc_se\n" : "s,phi\n";
    for (double s : grid) {
      const double phi = transform_at(s);
      csv += fmt17(s) + "," + fmt17(phi);
      if (monte_carlo) {
        long double acc = 0.0L, acc2 = 0.0L;
        for (std::uint64_t d : draws) {
          const double v = std::exp(-s * static_cast<double>(d));
          acc += v;
          acc2 += static_cast<long double>(v) * v;
        }
        const double nn = static_cast<double>(draws.size());
        const double mean = static_cast<double>(acc / nn);
        const double var =
            std::max(0.0, static_cast<double>(acc2 / nn) - mean * mean);
        csv += "," + fmt17(mean) + "," + fmt17(std::sqrt(var / nn));
      }
      csv += "\n";
    }

    ordered_json params;
    params["model"] = model_to_json(m);
    params["mode"] = limit ? "limit" : "finite";
    if (!limit) params["n"] = n;
    params["s_grid"] = grid;
    params["rel_tol"] = spec.rel_tol;
    params["abs_tol"] = spec.abs_tol;
    params["max_subdivisions"] = spec.max_subdivisions;
    if (monte_carlo) {
      params["replications"] = cfg.replications;
      params["seed"] = cfg.seed;
      params["seed_generated"] = generated;
      params["workers"] = cfg.workers;
    }
    emit(out_prefix, "laplace", params, ".laplace.csv", csv);
    return 0;
  }
};

// ---------------------------------------------------------------------
// simulate

struct SimulateCmd {
  ModelFlags model;
  SimFlags sim;
  int n = -1;
  bool limit = false;
  int k = 2;
  std::string engine = "exact";
  std::string out_prefix = "mtfcost_simulate";

  int run() {
    const Model m = model.build();
    if ((n > 0) == limit) {
      throw std::invalid_argument("simulate: give exactly one of --n or --limit");
    }
    FiniteEngine eng;
    if (engine == "exact") {
      eng = FiniteEngine::kExact;
    } else if (engine == "chain") {
      eng = FiniteEngine::kChain;
    } else {
      throw std::invalid_argument("simulate: --engine must be exact or chain");
    }
    if (limit && engine == "chain") {
      throw std::invalid_argument("simulate: the chain engine needs --n");
    }
    bool generated = false;
    const SimConfig cfg = sim.config(generated);

    const auto draws =
        limit ? run_limit(m, cfg) : run_finite_n(m, n, eng, cfg);
    const auto moments = estimate_moments(draws, k);

    std::string csv = "search_cost\n";
    for (std::uint64_t d : draws) csv += std::to_string(d) + "\n";

    ordered_json summary;
    summary["model"] = model_to_json(m);
    summary["mode"] = limit ? "limit" : "finite";
    if (!limit) {
      summary["n"] = n;
      summary["engine"] = engine;
      if (eng == FiniteEngine::kChain) {
        summary["burn_in"] =
            cfg.burn_in > 0 ? cfg.burn_in : default_burn_in(n);
      }
    }
    summary["replications"] = cfg.replications;
    summary["seed"] = cfg.seed;
    summary["seed_generated"] = generated;
    summary["workers"] = cfg.workers;
    summary["moments"] = json::array();
    for (const auto& est : moments) {
      summary["moments"].push_back({{"order", est.order},
                                    {"estimate", est.value},
                                    {"std_error", est.std_error}});
    }

    const std::string draws_path = out_prefix + ".draws.csv";
    const std::string summary_path = out_prefix + ".summary.json";
    write_text_file(draws_path, csv);
    write_text_file(summary_path, summary.dump(2) + "\n");
    write_manifest(out_prefix, "simulate", summary, {draws_path, summary_path});
    std::cerr << "wrote " << draws_path << ", " << summary_path << "\n";
    return 0;
  }
};

// ---------------------------------------------------------------------
// surface

struct SurfaceCmd {
  double theta_min = 0.2, theta_max = 10.0;
  double gamma_min = 0.1, gamma_max = 0.4;
  int k = 1;
  int grid = 50;
  std::string out_prefix;

  int run() {
    if (k != 1 && k != 2) {
      throw std::invalid_argument("surface: --k must be 1 or 2");
    }
    if (!(theta_min > 0.0) || theta_max < theta_min || gamma_min <= 0.0 ||
        gamma_max < gamma_min || gamma_max >= 1.0) {
      throw std::invalid_argument("surface: invalid parameter ranges");
    }
    const auto thetas = parse_grid("", theta_min, theta_max, grid);
    const auto gammas = parse_grid("", gamma_min, gamma_max, grid);
    std::string csv = "theta,gamma,k,finite,moment\n";
    for (double theta : thetas) {
      for (double gamma : gammas) {
        const MomentValue mv =
            limit_moment(MomentRequest{PitmanYorModel(gamma, theta), k});
        csv += fmt17(theta) + "," + fmt17(gamma) + "," + std::to_string(k) +
               "," + (mv.finite ? "1" : "0") + "," + fmt17(mv.value) + "\n";
      }
    }
    ordered_json params{{"theta_min", theta_min}, {"theta_max", theta_max},
                        {"gamma_min", gamma_min}, {"gamma_max", gamma_max},
                        {"k", k},                 {"grid", grid}};
    emit(out_prefix, "surface", params, ".surface.csv", csv);
    return 0;
  }
};

// ---------------------------------------------------------------------
// diagnostics

struct DiagnosticsCmd {
  ModelFlags model;
  QuadFlags quad;
  int l = 1;
  std::string n_list = "10,100,1000";
  std::string out_prefix;

  int run() {
    const Model m = model.build();
    const auto exponent = model_exponent(m);
    if (!exponent) {
      throw std::invalid_argument(
          "diagnostics: needs a fixed-exponent model (gamma, stable or gg)");
    }
    const QuadSpec spec = quad.spec();
    std::vector<int> ns;
    {
      std::stringstream ss(n_list);
      std::string item;
      while (std::getline(ss, item, ',')) ns.push_back(std::stoi(item));
    }
    if (ns.empty()) throw std::invalid_argument("diagnostics: empty n list");

    std::string csv = "n,i_n\n";
    std::vector<double> values;
    for (int n : ns) {
      const double v = integrability_diagnostic(*exponent, n, l, spec);
      values.push_back(v);
      csv += std::to_string(n) + "," + fmt17(v) + "\n";
    }
    const double ratio = values.back() / values.front();
    const std::string remark =
        ratio > 2.0 ? "sequence grows with n; uniform integrability looks "
                      "violated (divergent regime)"
                    : "sequence looks bounded over the requested n";

    ordered_json params;
    params["model"] = model_to_json(m);
    params["l"] = l;
    params["n"] = ns;
    params["remark"] = remark;
    emit(out_prefix, "diagnostics", params, ".diagnostics.csv", csv);
    std::cerr << "remark: " << remark << "\n";
    return 0;
  }
};

// ---------------------------------------------------------------------
// --config support: JSON values pre-load the bound variables, explicit
// flags then overwrite them during the parse.

std::string prescan_config_path(int argc, char** argv) {
  for (int i = 1; i < argc - 1; ++i) {
    if (std::string(argv[i]) == "--config") return argv[i + 1];
  }
  return {};
}

struct ConfigView {
  json data;
  bool loaded = false;

  void set(const char* key, std::string& target) const {
    if (loaded && data.contains(key)) target = data[key].is_string()
                                                   ? data[key].get<std::string>()
                                                   : data[key].dump();
  }
  void set(const char* key, double& target) const {
    if (loaded && data.contains(key)) target = data[key].get<double>();
  }
  void set(const char* key, int& target) const {
    if (loaded && data.contains(key)) target = data[key].get<int>();
  }
  void set(const char* key, bool& target) const {
    if (loaded && data.contains(key)) target = data[key].get<bool>();
  }

  void apply(ModelFlags& f) const {
    set("model", f.model);
    set("gamma", f.gamma);
    set("u", f.u);
    set("theta", f.theta);
    set("mass", f.mass);
  }
  void apply(QuadFlags& f) const {
    set("rel-tol", f.rel_tol);
    set("abs-tol", f.abs_tol);
    set("max-subdiv", f.max_subdiv);
  }
  void apply(SimFlags& f) const {
    set("reps", f.reps);
    set("seed", f.seed);
    set("workers", f.workers);
    set("burn-in", f.burn_in);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary Move-to-Front search-cost distribution: analytic "
               "moments, quadrature transforms, Monte-Carlo simulation"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags win)");

  ConfigView config;
  {
    const std::string path = prescan_config_path(argc, argv);
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "error: cannot read config file: " << path << "\n";
        return 2;
      }
      try {
        in >> config.data;
      } catch (const std::exception& e) {
        std::cerr << "error: bad config JSON: " << e.what() << "\n";
        return 2;
      }
      config.loaded = true;
    }
  }

  MomentsCmd moments_cmd;
  config.apply(moments_cmd.model);
  config.apply(moments_cmd.quad);
  config.apply(moments_cmd.sim);
  config.set("k", moments_cmd.k);
  auto* moments = app.add_subcommand("moments", "Limiting search-cost moments");
  moments->add_option("--config", config_path, "JSON config file (flags win)");
  moments_cmd.model.add_to(moments);
  moments_cmd.quad.add_to(moments);
  moments_cmd.sim.add_to(moments);
  moments->add_option("--k", moments_cmd.k, "Moment order")->required();
  moments->add_flag("--verify", moments_cmd.verify,
                    "Add quadrature values and relative errors");
  moments->add_flag("--simulate", moments_cmd.simulate,
                    "Add Monte-Carlo estimates from the limit sampler");
  moments->add_option("--out", moments_cmd.out_prefix, "Output file prefix");

  LaplaceCmd laplace_cmd;
  config.apply(laplace_cmd.model);
  config.apply(laplace_cmd.quad);
  config.apply(laplace_cmd.sim);
  config.set("n", laplace_cmd.n);
  config.set("limit", laplace_cmd.limit);
  auto* laplace =
      app.add_subcommand("laplace", "Laplace transform of the search cost");
  laplace->add_option("--config", config_path, "JSON config file (flags win)");
  laplace_cmd.model.add_to(laplace);
  laplace_cmd.quad.add_to(laplace);
  laplace_cmd.sim.add_to(laplace);
  laplace->add_option("--s", laplace_cmd.s_list, "Comma list of s values");
  laplace->add_option("--s-min", laplace_cmd.s_min, "Grid start");
  laplace->add_option("--s-max", laplace_cmd.s_max, "Grid end");
  laplace->add_option("--s-count", laplace_cmd.s_count, "Grid size");
  laplace->add_option("--n", laplace_cmd.n, "Finite list size (2..200)");
  laplace->add_flag("--limit", laplace_cmd.limit, "Limiting transform");
  laplace->add_flag("--mc", laplace_cmd.monte_carlo,
                    "Add Monte-Carlo transform column");
  laplace->add_option("--out", laplace_cmd.out_prefix, "Output file prefix");

  SimulateCmd simulate_cmd;
  config.apply(simulate_cmd.model);
  config.apply(simulate_cmd.sim);
  config.set("n", simulate_cmd.n);
  config.set("limit", simulate_cmd.limit);
  config.set("k", simulate_cmd.k);
  config.set("engine", simulate_cmd.engine);
  auto* simulate =
      app.add_subcommand("simulate", "Monte-Carlo search-cost draws");
  simulate->add_option("--config", config_path, "JSON config file (flags win)");
  simulate_cmd.model.add_to(simulate);
  simulate_cmd.sim.add_to(simulate);
  simulate->add_option("--n", simulate_cmd.n, "Finite list size");
  simulate->add_flag("--limit", simulate_cmd.limit, "Limiting law sampler");
  simulate->add_option("--k", simulate_cmd.k, "Summary moment order");
  simulate->add_option("--engine", simulate_cmd.engine,
                       "Finite-n engine: exact|chain");
  simulate->add_option("--out", simulate_cmd.out_prefix, "Output file prefix");

  SurfaceCmd surface_cmd;
  config.set("k", surface_cmd.k);
  config.set("grid", surface_cmd.grid);
  auto* surface = app.add_subcommand(
      "surface", "Pitman-Yor limiting-moment surface over (theta, gamma)");
  surface->add_option("--config", config_path, "JSON config file (flags win)");
  surface->add_option("--theta-min", surface_cmd.theta_min, "Theta range start");
  surface->add_option("--theta-max", surface_cmd.theta_max, "Theta range end");
  surface->add_option("--gamma-min", surface_cmd.gamma_min, "Gamma range start");
  surface->add_option("--gamma-max", surface_cmd.gamma_max, "Gamma range end");
  surface->add_option("--k", surface_cmd.k, "Moment order (1 or 2)");
  surface->add_option("--grid", surface_cmd.grid, "Grid resolution per axis");
  surface->add_option("--out", surface_cmd.out_prefix, "Output file prefix");

  DiagnosticsCmd diagnostics_cmd;
  config.apply(diagnostics_cmd.model);
  config.apply(diagnostics_cmd.quad);
  config.set("l", diagnostics_cmd.l);
  auto* diagnostics = app.add_subcommand(
      "diagnostics", "Uniform-integrability diagnostic I_n(l) over n");
  diagnostics->add_option("--config", config_path,
                          "JSON config file (flags win)");
  diagnostics_cmd.model.add_to(diagnostics);
  diagnostics_cmd.quad.add_to(diagnostics);
  diagnostics->add_option("--l", diagnostics_cmd.l, "Moment block order l");
  diagnostics->add_option("--n", diagnostics_cmd.n_list,
                          "Comma list of list sizes");
  diagnostics->add_option("--out", diagnostics_cmd.out_prefix,
                          "Output file prefix");

  try {
    app.parse(argc, argv);
    if (moments->parsed()) return moments_cmd.run();
    if (laplace->parsed()) return laplace_cmd.run();
    if (simulate->parsed()) return simulate_cmd.run();
    if (surface->parsed()) return surface_cmd.run();
    if (diagnostics->parsed()) return diagnostics_cmd.run();
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const NumericError& e) {
    ordered_json report;
    report["error"] = "numeric failure";
    report["message"] = e.what();
    report["partial_estimate"] = e.partial();
    report["error_estimate"] = e.error_estimate();
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
