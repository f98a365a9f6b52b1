#ifndef MAXLAB_EXPERIMENT_HPP
#define MAXLAB_EXPERIMENT_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "maxlab/acceptance.hpp"
#include "maxlab/core.hpp"
#include "maxlab/ergodic.hpp"
#include "maxlab/io.hpp"
#include "maxlab/mellin.hpp"
#include "maxlab/modulus.hpp"
#include "maxlab/semigroup.hpp"

namespace maxlab {

inline constexpr const char* kVersion = "1.0.0";

/// Raised for anything wrong with the configuration; maps to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"verify-semigroup", "modulus", "hds",
                                                 "mellin-table",     "maximal", "pointwise",
                                                 "bip-plan",         "full-suite"};
  return names;
}

struct ExperimentConfig {
  std::string command = "full-suite";
  std::uint64_t seed = acceptance::kDefaultSeed;

  EnsembleSpec ensemble;

  struct Exponents {
    double p = 4.0;
    double r = 4.0;
    std::vector<double> p_list = {1.5, 2.0, 3.0};
    std::vector<std::size_t> d = {1, 2, 4, 8, 16};
  } exponents;

  struct Angles {
    double psi = 0.1 * kPi;
    std::optional<double> theta;
  } angles;

  struct Grids {
    double t_min = 1e-3;
    double t_max = 1e2;
    std::size_t radius_count = 24;
    std::size_t angle_count = 9;
    double U = 40.0;
    double h = 0.01;
    std::size_t u_count = 801;
    std::vector<double> t_list = {0.25, 0.5, 1.0};
    double rho_min = 1e-6;
    double rho_max = 1e-1;
    std::size_t rho_count = 11;
    std::size_t lambda_count = 25;
  } grids;

  int trials = 5;
  ToleranceConfig tolerances;
  std::string output = "maxlab";

  /// Throws ConfigError naming the first violated precondition.
  void validate() const {
    auto fail = [](const std::string& what) { throw ConfigError(what); };
    bool known = false;
    for (const auto& c : command_names()) known = known || c == command;
    if (!known) fail("unknown command '" + command + "'");
    try {
      ensemble.validate();
      tolerances.validate();
    } catch (const std::exception& e) {
      fail(e.what());
    }
    auto open_exponent = [&](double x, const char* name) {
      if (!(x > 1.0) || !std::isfinite(x)) fail(std::string(name) + " must satisfy 1 < x < inf");
    };
    open_exponent(exponents.p, "exponents.p");
    open_exponent(exponents.r, "exponents.r");
    if (exponents.p_list.empty()) fail("exponents.p_list is empty");
    for (double p : exponents.p_list) open_exponent(p, "exponents.p_list entry");
    if (exponents.d.empty()) fail("exponents.d is empty");
    for (std::size_t d : exponents.d)
      if (d == 0) fail("exponents.d entries must be >= 1");
    if (!(angles.psi >= 0.0) || !(angles.psi < kPi / 2)) fail("angles.psi must lie in [0, pi/2)");
    if (angles.theta && !(*angles.theta > 0.0 && *angles.theta < 1.0))
      fail("angles.theta must lie in (0, 1)");
    if (!(grids.t_min > 0.0) || !(grids.t_max > grids.t_min)) fail("grids need 0 < t_min < t_max");
    if (grids.radius_count < 2) fail("grids.radius_count must be >= 2");
    if (grids.angle_count == 0) fail("grids.angle_count must be >= 1");
    if (!(grids.U > 0.0) || !(grids.h > 0.0) || !(grids.h < grids.U)) fail("grids need 0 < h < U");
    if (grids.u_count < 2) fail("grids.u_count must be >= 2");
    if (grids.t_list.empty()) fail("grids.t_list is empty");
    for (double t : grids.t_list)
      if (!(t > 0.0)) fail("grids.t_list entries must be positive");
    if (!(grids.rho_min > 0.0) || !(grids.rho_max > grids.rho_min) || grids.rho_count < 2)
      fail("grids need 0 < rho_min < rho_max and rho_count >= 2");
    if (grids.lambda_count == 0) fail("grids.lambda_count must be >= 1");
    if (trials < 1) fail("trials must be >= 1");
    if (output.empty()) fail("output prefix is empty");
  }
};

namespace detail {

/// Rejects keys outside `allowed` so that typos fail loudly.
inline void check_keys(const json& j, const std::string& where, std::set<std::string> allowed) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
void read_key(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

}  // namespace detail

inline ExperimentConfig config_from_json(const json& j) {
  using detail::check_keys;
  using detail::read_key;
  ExperimentConfig c;
  check_keys(j, "config", {"command", "seed", "ensemble", "exponents", "angles", "grids", "trials",
                           "tolerances", "output"});
  read_key(j, "command", c.command, "config");
  read_key(j, "seed", c.seed, "config");
  read_key(j, "trials", c.trials, "config");
  read_key(j, "output", c.output, "config");
  if (j.contains("ensemble")) {
    const auto& e = j["ensemble"];
    check_keys(e, "ensemble", {"n", "n_min", "count", "kind", "c", "identity"});
    read_key(e, "n", c.ensemble.n, "ensemble");
    read_key(e, "n_min", c.ensemble.n_min, "ensemble");
    read_key(e, "count", c.ensemble.count, "ensemble");
    read_key(e, "c", c.ensemble.c, "ensemble");
    read_key(e, "identity", c.ensemble.identity, "ensemble");
    if (e.contains("kind")) {
      try {
        c.ensemble.kind = generator_kind_from_string(e["kind"].get<std::string>());
      } catch (const std::exception& ex) {
        throw ConfigError(std::string("ensemble.kind: ") + ex.what());
      }
    }
  }
  if (j.contains("exponents")) {
    const auto& e = j["exponents"];
    check_keys(e, "exponents", {"p", "r", "p_list", "d"});
    read_key(e, "p", c.exponents.p, "exponents");
    read_key(e, "r", c.exponents.r, "exponents");
    read_key(e, "p_list", c.exponents.p_list, "exponents");
    read_key(e, "d", c.exponents.d, "exponents");
  }
  if (j.contains("angles")) {
    const auto& a = j["angles"];
    check_keys(a, "angles", {"psi", "theta"});
    read_key(a, "psi", c.angles.psi, "angles");
    if (a.contains("theta") && !a["theta"].is_null()) {
      double th = 0.0;
      read_key(a, "theta", th, "angles");
      c.angles.theta = th;
    }
  }
  if (j.contains("grids")) {
    const auto& g = j["grids"];
    check_keys(g, "grids", {"t_min", "t_max", "radius_count", "angle_count", "U", "h", "u_count",
                            "t_list", "rho_min", "rho_max", "rho_count", "lambda_count"});
    read_key(g, "t_min", c.grids.t_min, "grids");
    read_key(g, "t_max", c.grids.t_max, "grids");
    read_key(g, "radius_count", c.grids.radius_count, "grids");
    read_key(g, "angle_count", c.grids.angle_count, "grids");
    read_key(g, "U", c.grids.U, "grids");
    read_key(g, "h", c.grids.h, "grids");
    read_key(g, "u_count", c.grids.u_count, "grids");
    read_key(g, "t_list", c.grids.t_list, "grids");
    read_key(g, "rho_min", c.grids.rho_min, "grids");
    read_key(g, "rho_max", c.grids.rho_max, "grids");
    read_key(g, "rho_count", c.grids.rho_count, "grids");
    read_key(g, "lambda_count", c.grids.lambda_count, "grids");
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    check_keys(t, "tolerances", {"abs_tol", "quad_tol", "stab_tol"});
    read_key(t, "abs_tol", c.tolerances.abs_tol, "tolerances");
    read_key(t, "quad_tol", c.tolerances.quad_tol, "tolerances");
    read_key(t, "stab_tol", c.tolerances.stab_tol, "tolerances");
  }
  return c;
}

inline json config_to_json(const ExperimentConfig& c) {
  return {{"command", c.command},
          {"seed", c.seed},
          {"ensemble",
           {{"n", c.ensemble.n},
            {"n_min", c.ensemble.n_min},
            {"count", c.ensemble.count},
            {"kind", to_string(c.ensemble.kind)},
            {"c", c.ensemble.c},
            {"identity", c.ensemble.identity}}},
          {"exponents",
           {{"p", c.exponents.p},
            {"r", c.exponents.r},
            {"p_list", c.exponents.p_list},
            {"d", c.exponents.d}}},
          {"angles",
           {{"psi", c.angles.psi},
            {"theta", c.angles.theta ? json(*c.angles.theta) : json(nullptr)}}},
          {"grids",
           {{"t_min", c.grids.t_min},
            {"t_max", c.grids.t_max},
            {"radius_count", c.grids.radius_count},
            {"angle_count", c.grids.angle_count},
            {"U", c.grids.U},
            {"h", c.grids.h},
            {"u_count", c.grids.u_count},
            {"t_list", c.grids.t_list},
            {"rho_min", c.grids.rho_min},
            {"rho_max", c.grids.rho_max},
            {"rho_count", c.grids.rho_count},
            {"lambda_count", c.grids.lambda_count}}},
          {"trials", c.trials},
          {"tolerances",
           {{"abs_tol", c.tolerances.abs_tol},
            {"quad_tol", c.tolerances.quad_tol},
            {"stab_tol", c.tolerances.stab_tol}}},
          {"output", c.output}};
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

struct RunResult {
  int status = 0;  // 0 pass, 1 numeric failure
  bool pass = true;
  std::map<std::string, CsvTable> tables;
  json manifest;                    // command-specific results; run() adds the common fields
  std::vector<std::string> report;  // human-readable lines for stdout
  std::string failure;              // first failing row, if any
  json summary;                     // full-suite only
};

namespace detail {

/// Fails the run and records the first failing row of `table`.
inline void fail_row(RunResult& res, const std::string& table, std::size_t index) {
  res.pass = false;
  if (!res.failure.empty()) return;
  const CsvTable& t = res.tables.at(table);
  std::string line = table + " row " + std::to_string(index) + ": ";
  for (std::size_t k = 0; k < t.header().size(); ++k) {
    if (k) line += ", ";
    line += t.header()[k] + "=" + t.rows()[index][k];
  }
  res.failure = line;
}

inline SectorGrid sector_grid(const ExperimentConfig& c) {
  return SectorGrid::make(c.angles.psi, c.grids.t_min, c.grids.t_max, c.grids.radius_count,
                          c.grids.angle_count);
}

inline RunResult run_verify_semigroup(const ExperimentConfig& c) {
  RunResult res;
  const double p = c.exponents.p;
  if (c.angles.psi > stein_angle(p))
    throw ConfigError("angles.psi exceeds the sector angle pi(1/2 - |1/p - 1/2|) = " +
                      std::to_string(stein_angle(p)));
  const auto grid = sector_grid(c);
  const auto t_grid = geometric_grid(c.grids.t_min, c.grids.t_max, c.grids.radius_count);
  auto& contraction = res.tables["contraction"] =
      CsvTable({"generator", "n", "worst_norm", "failing_times", "pass"});
  auto& probe = res.tables["probe"] = CsvTable({"z_re", "z_im", "p", "norm_lb"});
  double worst_probe = 0.0;
  for (std::size_t g = 0; g < c.ensemble.count; ++g) {
    const auto gen = ensemble_member(c.ensemble, c.seed, g);
    const auto rep = verify_contraction_property(gen, t_grid, c.tolerances.abs_tol);
    contraction.row().add(g).add(gen.size()).add(rep.worst_norm).add(rep.failing_times.size())
        .add(rep.pass);
    if (!rep.pass) fail_row(res, "contraction", contraction.size() - 1);
    const auto pr = sector_contraction_probe(gen, p, grid, c.trials, c.seed + g);
    for (const auto& row : pr.rows) {
      probe.row().add(row.z.real()).add(row.z.imag()).add(row.p).add(row.norm_lb);
      if (row.norm_lb > 1.0 + 1e-9) fail_row(res, "probe", probe.size() - 1);
    }
    worst_probe = std::max(worst_probe, pr.max_norm);
  }
  res.manifest["results"] = {{"max_probe_norm", worst_probe},
                             {"stein_angle", stein_angle(p)},
                             {"probe_points_per_generator", grid.points().size()}};
  res.manifest["row_order"] = "probe rows: generator-major, then radius-major sector points";
  res.report.push_back("max sampled ||T_z||_p = " + format_double(worst_probe));
  return res;
}

inline RunResult run_modulus(const ExperimentConfig& c) {
  RunResult res;
  auto& mod = res.tables["modulus"] =
      CsvTable({"generator", "n", "t", "depth", "residual", "extrapolated"});
  auto& dom = res.tables["domination"] =
      CsvTable({"generator", "n", "checks", "violations", "max_excess", "max_norm_excess"});
  json matrices = json::array();
  for (std::size_t g = 0; g < c.ensemble.count; ++g) {
    const auto gen = ensemble_member(c.ensemble, c.seed, g);
    json per_t = json::array();
    for (double t : c.grids.t_list) {
      const auto m = modulus_semigroup(gen, t, c.tolerances.stab_tol);
      mod.row().add(g).add(gen.size()).add(t).add(m.depth).add(m.residual).add(m.extrapolated);
      per_t.push_back(modulus_to_json(t, m));
    }
    matrices.push_back({{"generator", generator_to_json(gen)}, {"modulus", std::move(per_t)}});
    const auto rep = verify_domination(gen, c.grids.t_list, c.trials, c.seed + g,
                                       c.tolerances.abs_tol, c.tolerances.stab_tol);
    dom.row().add(g).add(gen.size()).add(rep.checks).add(rep.violations).add(rep.max_excess)
        .add(rep.max_norm_excess);
    if (!rep.pass()) fail_row(res, "domination", dom.size() - 1);
  }
  res.manifest["results"] = {{"generators", std::move(matrices)}};
  res.manifest["row_order"] = "generator-major, then t_list order";
  res.report.push_back("domination checked on " + std::to_string(dom.size()) + " generators");
  return res;
}

inline RunResult run_hds(const ExperimentConfig& c) {
  RunResult res;
  const auto grid = default_ergodic_grid();
  HdsOptions opts;
  opts.trials = c.trials;
  opts.d = c.exponents.d.back();
  opts.r = c.exponents.r;
  const auto reports = hds_experiment(c.ensemble, c.exponents.p_list, grid, c.seed, opts);
  const std::vector<std::string> cols = {"seed", "n", "p", "ratio", "bound", "pass"};
  auto& scalar = res.tables["hds_scalar"] = CsvTable(cols);
  auto& vec = res.tables["hds_vector"] = CsvTable(cols);
  json per_p = json::array();
  for (const auto& rep : reports) {
    for (const auto& row : rep.scalar_rows) {
      scalar.row().add(row.seed).add(row.n).add(row.p).add(row.ratio).add(row.bound).add(row.pass);
      if (!row.pass) fail_row(res, "hds_scalar", scalar.size() - 1);
    }
    for (const auto& row : rep.vector_rows) {
      vec.row().add(row.seed).add(row.n).add(row.p).add(row.ratio).add(row.bound).add(row.pass);
      if (!row.pass) fail_row(res, "hds_vector", vec.size() - 1);
    }
    per_p.push_back({{"p", rep.p}, {"bound", rep.bound}, {"max_ratio", rep.max_ratio()}});
    res.report.push_back("p = " + format_double(rep.p) + ": max ratio " +
                         format_double(rep.max_ratio()) + " vs bound " + format_double(rep.bound));
  }
  res.manifest["results"] = {{"per_p", std::move(per_p)},
                             {"t_grid", {{"min", grid.front()}, {"max", grid.back()},
                                         {"count", grid.size()}}},
                             {"fibre", {{"d", opts.d}, {"r", opts.r}}}};
  res.manifest["row_order"] = "p_list order, then generator, then trial";
  return res;
}

inline RunResult run_mellin_table(const ExperimentConfig& c) {
  RunResult res;
  const double psi = c.angles.psi;
  const auto u_grid = uniform_grid(-c.grids.U, c.grids.U, c.grids.u_count);
  auto& tab = res.tables["multiplier"] = CsvTable({"theta", "u", "re", "im", "bound_ratio"});
  double c0 = 0.0;
  for (const auto& row : multiplier_table(psi, u_grid, c.grids.angle_count)) {
    tab.row().add(row.theta).add(row.u).add(row.value.real()).add(row.value.imag())
        .add(row.bound_ratio);
    c0 = std::max(c0, row.bound_ratio);
  }
  const double dc = decay_constant(psi, u_grid, c.grids.angle_count);
  auto& rec = res.tables["reconstruction"] =
      CsvTable({"theta", "lambda", "re", "im", "direct_re", "direct_im", "error"});
  const MellinOptions opts{c.grids.U, c.grids.h};
  double worst = 0.0;
  for (double th : theta_grid(psi, c.grids.angle_count))
    for (double l : geometric_grid(1e-2, 1e2, c.grids.lambda_count)) {
      const auto r = mellin_reconstruct(th, l, opts);
      rec.row().add(th).add(l).add(r.value.real()).add(r.value.imag()).add(r.direct.real())
          .add(r.direct.imag()).add(r.error);
      worst = std::max(worst, r.error);
      if (!r.within(c.tolerances.quad_tol)) fail_row(res, "reconstruction", rec.size() - 1);
    }
  double tail = 0.0;
  for (double th : theta_grid(psi, c.grids.angle_count))
    tail = std::max(tail, mellin_tail_bound(th, c.grids.U, dc));
  res.manifest["results"] = {{"decay_constant", dc},
                             {"max_bound_ratio", c0},
                             {"max_reconstruction_error", worst},
                             {"tail_bound", tail}};
  res.manifest["row_order"] = "theta-major, then u (or lambda) ascending";
  res.report.push_back("decay_constant = " + format_double(dc));
  res.report.push_back("max reconstruction error = " + format_double(worst));
  return res;
}

inline json plan_to_json(const BipPlan& plan) {
  return {{"p", plan.p},         {"r", plan.r},         {"psi", plan.psi},
          {"theta", plan.theta}, {"q", plan.q},         {"sigma", plan.sigma},
          {"omega", plan.omega}};
}

inline RunResult run_bip_plan(const ExperimentConfig& c) {
  RunResult res;
  BipPlan plan;
  try {
    plan = bip_plan(c.exponents.p, c.exponents.r, c.angles.psi, c.angles.theta);
  } catch (const HypothesisError& e) {
    throw ConfigError(e.what());
  }
  auto& tab = res.tables["plan"] = CsvTable({"p", "r", "psi", "theta", "q", "sigma", "omega"});
  tab.row().add(plan.p).add(plan.r).add(plan.psi).add(plan.theta).add(plan.q).add(plan.sigma)
      .add(plan.omega);
  res.manifest["results"] = {{"plan", plan_to_json(plan)}};
  res.report.push_back("theta = " + format_double(plan.theta));
  res.report.push_back("q = " + format_double(plan.q));
  res.report.push_back("sigma = " + format_double(plan.sigma));
  res.report.push_back("omega = " + format_double(plan.omega));
  return res;
}

inline RunResult run_maximal(const ExperimentConfig& c) {
  RunResult res;
  MaximalExperimentOptions opts;
  opts.trials = c.trials;
  opts.t_min = c.grids.t_min;
  opts.t_max = c.grids.t_max;
  opts.radius_count = c.grids.radius_count;
  opts.angle_count = c.grids.angle_count;
  opts.theta = c.angles.theta;
  if (c.exponents.r <= 1.0) throw ConfigError("exponents.r must exceed 1 for the maximal theorem");
  MaximalExperimentResult out;
  try {
    out = maximal_theorem_experiment(c.ensemble, c.exponents.p, c.exponents.r, c.angles.psi,
                                     c.exponents.d, c.seed, opts);
  } catch (const HypothesisError& e) {
    throw ConfigError(e.what());
  }
  auto& prof = res.tables["profile"] = CsvTable({"d", "C_emp"});
  for (const auto& row : out.profile) prof.row().add(row.d).add(row.c_emp);
  auto& tri = res.tables["triangle"] =
      CsvTable({"d", "generator", "trial", "maximal", "ergodic", "multiplier", "field"});
  for (const auto& row : out.triangle) {
    tri.row().add(row.d).add(row.generator).add(row.trial).add(row.maximal).add(row.ergodic)
        .add(row.multiplier).add(row.field);
    if (row.maximal > row.ergodic + row.multiplier + 1e-9 * row.field)
      fail_row(res, "triangle", tri.size() - 1);
  }
  if (out.dimension_ratio > 2.0) fail_row(res, "profile", prof.size() - 1);
  res.manifest["results"] = {{"plan", plan_to_json(out.plan)},
                             {"dimension_ratio", out.dimension_ratio},
                             {"triangle_violations", out.triangle_violations}};
  res.manifest["row_order"] = "triangle rows: d list order, then generator, then trial";
  res.report.push_back("C_emp(d_max)/C_emp(d_min) = " + format_double(out.dimension_ratio));
  return res;
}

inline RunResult run_pointwise(const ExperimentConfig& c) {
  RunResult res;
  auto radii = geometric_grid(c.grids.rho_min, c.grids.rho_max, c.grids.rho_count);
  std::reverse(radii.begin(), radii.end());
  auto& tab = res.tables["convergence"] = CsvTable({"rho", "e"});
  auto& slopes = res.tables["slopes"] = CsvTable({"generator", "d", "slope", "monotone", "pass"});
  for (std::size_t g = 0; g < c.ensemble.count; ++g) {
    const auto gen = ensemble_member(c.ensemble, c.seed, g);
    const std::size_t d = c.exponents.d[g % c.exponents.d.size()];
    Rng rng = Rng::stream(c.seed ^ 0x7f4a7c15ULL, g);
    const BochnerField field(random_table(rng, gen.size(), d), BanachNorm(d, c.exponents.r));
    const auto prof = pointwise_convergence_profile(gen, field, c.angles.psi, radii,
                                                    c.grids.angle_count);
    for (const auto& row : prof.rows) tab.row().add(row.rho).add(row.error);
    slopes.row().add(g).add(d).add(prof.slope).add(prof.monotone).add(prof.pass());
    if (!prof.pass()) fail_row(res, "slopes", slopes.size() - 1);
  }
  res.manifest["row_order"] = "convergence rows: generator-major, rho decreasing";
  res.report.push_back("profiles: " + std::to_string(slopes.size()));
  return res;
}

inline RunResult run_full_suite(const ExperimentConfig& c) {
  RunResult res;
  json criteria = json::array();
  const auto results = acceptance::run_all(c.seed, [&](const acceptance::CriterionResult& r) {
    res.report.push_back(acceptance::verdict_line(r));
  });
  for (const auto& r : results) {
    for (const auto& [name, tab] : r.tables) res.tables[name] = tab;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds}});
    if (!r.pass && res.pass) {
      res.pass = false;
      res.failure = "criterion " + std::to_string(r.id) + " (" + r.name + "): " + r.detail;
    }
  }
  if (results.size() < 12) res.pass = false;
  res.summary = {{"seed", c.seed}, {"pass", res.pass}, {"criteria", std::move(criteria)}};
  res.manifest["results"] = {{"criteria_run", results.size()}};
  return res;
}

}  // namespace detail

/// Validates, dispatches and returns the tables and manifest; writes nothing.
/// Throws ConfigError for invalid input.
inline RunResult run(const ExperimentConfig& c) {
  c.validate();
  RunResult res;
  if (c.command == "verify-semigroup") res = detail::run_verify_semigroup(c);
  else if (c.command == "modulus") res = detail::run_modulus(c);
  else if (c.command == "hds") res = detail::run_hds(c);
  else if (c.command == "mellin-table") res = detail::run_mellin_table(c);
  else if (c.command == "maximal") res = detail::run_maximal(c);
  else if (c.command == "pointwise") res = detail::run_pointwise(c);
  else if (c.command == "bip-plan") res = detail::run_bip_plan(c);
  else res = detail::run_full_suite(c);
  res.status = res.pass ? 0 : 1;
  json tables = json::object();
  for (const auto& [name, tab] : res.tables)
    tables[name] = {{"file", c.output + "." + name + ".csv"},
                    {"columns", tab.header()},
                    {"rows", tab.size()}};
  res.manifest["tool"] = "maxlab";
  res.manifest["version"] = kVersion;
  res.manifest["command"] = c.command;
  res.manifest["seed"] = c.seed;
  res.manifest["config"] = config_to_json(c);
  res.manifest["tables"] = std::move(tables);
  res.manifest["pass"] = res.pass;
  if (!res.failure.empty()) res.manifest["failure"] = res.failure;
  return res;
}

/// Writes `<prefix>.manifest.json`, one `<prefix>.<table>.csv` per table and,
/// for the full suite, `<prefix>.summary.json`.
inline void write_artifacts(const ExperimentConfig& c, const RunResult& res) {
  for (const auto& [name, tab] : res.tables) tab.write(c.output + "." + name + ".csv");
  auto dump = [](const std::string& path, const json& j) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << j.dump(2) << '\n';
  };
  dump(c.output + ".manifest.json", res.manifest);
  if (!res.summary.is_null()) dump(c.output + ".summary.json", res.summary);
}

}  // namespace maxlab

#endif  // MAXLAB_EXPERIMENT_HPP
