#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "maxlab/experiment.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxlab: maximal-function verification laboratory"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> psi, theta, p, r, abs_tol;
  std::optional<std::size_t> count, n;
  std::optional<int> trials;
  std::optional<std::string> out, kind;

  for (const auto& name : maxlab::command_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", config_path, "JSON configuration document")->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "override seed");
    sub->add_option("--psi", psi, "override angles.psi");
    sub->add_option("--theta", theta, "override angles.theta");
    sub->add_option("--p", p, "override exponents.p");
    sub->add_option("--r", r, "override exponents.r");
    sub->add_option("--count", count, "override ensemble.count");
    sub->add_option("--n", n, "override ensemble.n");
    sub->add_option("--kind", kind, "override ensemble.kind");
    sub->add_option("--trials", trials, "override trials");
    sub->add_option("--abs-tol", abs_tol, "override tolerances.abs_tol");
    sub->add_option("--out", out, "override output prefix");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    maxlab::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = maxlab::load_config(config_path);
    cfg.command = app.get_subcommands().front()->get_name();
    if (seed) cfg.seed = *seed;
    if (psi) cfg.angles.psi = *psi;
    if (theta) cfg.angles.theta = *theta;
    if (p) cfg.exponents.p = *p;
    if (r) cfg.exponents.r = *r;
    if (count) cfg.ensemble.count = *count;
    if (n) cfg.ensemble.n = *n;
    if (kind) {
      try {
        cfg.ensemble.kind = maxlab::generator_kind_from_string(*kind);
      } catch (const std::exception& e) {
        throw maxlab::ConfigError(e.what());
      }
    }
    if (trials) cfg.trials = *trials;
    if (abs_tol) cfg.tolerances.abs_tol = *abs_tol;
    if (out) cfg.output = *out;

    const auto res = maxlab::run(cfg);
    maxlab::write_artifacts(cfg, res);
    for (const auto& line : res.report) std::cout << line << '\n';
    std::cout << cfg.command << ": " << (res.pass ? "PASS" : "FAIL") << " (" << cfg.output
              << ".manifest.json)\n";
    if (!res.pass) std::cerr << "failing row: " << res.failure << '\n';
    return res.status;
  } catch (const maxlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
