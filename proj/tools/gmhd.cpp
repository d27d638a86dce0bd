// gmhd: run, resume and verify ideal MHD simulations with Gevrey diagnostics.
//
// Exit codes: 0 success, 1 usage / config / checkpoint error, 2 numerical
// abort (blow-up heuristic) or a failed exact check.

#include <cmath>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gmhd/errors.hpp"
#include "gmhd/gevrey.hpp"
#include "gmhd/initial.hpp"
#include "gmhd/io.hpp"
#include "gmhd/verify.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

const char* status_name(gmhd::RunStatus s) {
  switch (s) {
    case gmhd::RunStatus::completed: return "completed";
    case gmhd::RunStatus::blowup: return "blowup";
    case gmhd::RunStatus::numerical_abort: return "numerical_abort";
  }
  return "?";
}

// NaN / inf have no JSON spelling
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

gmhd::RunConfig read_config(const std::string& path) {
  gmhd::RunConfig cfg = gmhd::load_config(path);
  gmhd::apply_environment(cfg);
  for (const std::string& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
  return cfg;
}

int finish_run(const gmhd::RunConfig& cfg, const gmhd::MHDState& initial) {
  gmhd::RunArtifacts art;
  const gmhd::RunResult res = gmhd::run_with_outputs(cfg, initial, &art);
  json out;
  out["status"] = status_name(res.status);
  if (!res.message.empty()) out["message"] = res.message;
  out["t"] = res.final_state.t;
  out["steps"] = res.steps;
  out["samples"] = res.records.size();
  out["C"] = number(res.C);
  out["C_tilde"] = number(res.C_tilde);
  out["tau0"] = number(res.tau0);
  if (!res.records.empty()) out["tau"] = number(res.records.back().tau);
  out["csv"] = art.csv;
  out["spectra"] = art.spectra.size();
  out["checkpoints"] = art.checkpoints;
  std::cout << out.dump(2) << "\n";
  if (res.status != gmhd::RunStatus::completed) std::cerr << "error: " << res.message << "\n";
  return gmhd::exit_code(res.status);
}

int cmd_run(const std::string& config) {
  const gmhd::RunConfig cfg = read_config(config);
  return finish_run(cfg, gmhd::init_state(cfg.initial, gmhd::Grid(cfg.n)));
}

int cmd_resume(const std::string& checkpoint, const std::string& config) {
  gmhd::RunConfig cfg = read_config(config);
  const gmhd::Checkpoint cp = gmhd::load_checkpoint(checkpoint);
  const int n = cp.state.u.grid().n();
  if (n != cfg.n) {
    throw gmhd::ConfigError("grid.n: config has " + std::to_string(cfg.n) + ", checkpoint has " + std::to_string(n));
  }
  if (cp.gevrey.r != cfg.run.gevrey.r || cp.gevrey.s != cfg.run.gevrey.s) {
    throw gmhd::ConfigError("gevrey.r / gevrey.s differ from the checkpoint");
  }
  if (!(cfg.run.t_end > cp.state.t)) {
    throw gmhd::ConfigError("time.t_end must exceed the checkpoint time " + gmhd::format_double(cp.state.t));
  }
  // the radius carries on from where the checkpoint left it
  cfg.run.gevrey.tau = cp.gevrey.tau;
  return finish_run(cfg, cp.state);
}

int cmd_fit_radius(const std::string& checkpoint, double s) {
  if (!(s >= 1.0)) throw gmhd::InvalidArgument("--s must be >= 1");
  const gmhd::Checkpoint cp = gmhd::load_checkpoint(checkpoint);
  json out;
  out["t"] = cp.state.t;
  out["n"] = cp.state.u.grid().n();
  out["s"] = s;
  out["tau_fit"] = number(gmhd::fit_radius(cp.state, s));
  out["tau_checkpoint"] = cp.gevrey.tau;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const gmhd::VerifyOptions& opt) {
  const std::vector<gmhd::CheckRecord> records = gmhd::verify_suite(suite, opt);
  json out;
  out["suite"] = suite;
  out["options"] = {{"range", opt.range}, {"seed", opt.seed}, {"size", opt.size}};
  json list = json::array();
  for (const gmhd::CheckRecord& r : records) {
    list.push_back({{"name", r.name},
                    {"kind", r.kind},
                    {"value", number(r.value)},
                    {"limit", number(r.limit)},
                    {"pass", r.pass},
                    {"exact", r.exact}});
  }
  out["records"] = std::move(list);
  const bool ok = gmhd::all_exact_pass(records);
  out["pass"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral ideal MHD on the 3-torus with Gevrey-radius diagnostics"};
  app.require_subcommand(1);

  std::string config, checkpoint, suite;
  auto* run = app.add_subcommand("run", "Run a simulation from a config file");
  run->add_option("config", config, "Config file")->required();

  auto* resume = app.add_subcommand("resume", "Continue a run from a checkpoint");
  resume->add_option("checkpoint", checkpoint, "Checkpoint file")->required();
  resume->add_option("config", config, "Config file (t_end, cadence, outputs)")->required();

  double s = 1.0;
  auto* fit = app.add_subcommand("fit-radius", "Fit the spectral decay radius of a checkpoint");
  fit->add_option("checkpoint", checkpoint, "Checkpoint file")->required();
  fit->add_option("--s", s, "Gevrey index (>= 1)")->required();

  gmhd::VerifyOptions opt;
  auto* verify = app.add_subcommand("verify", "Run estimate checks; JSON report on stdout");
  verify->add_option("suite", suite, "identities | inequalities | balance | all")->required();
  verify->add_option("--range", opt.range, "Scalar sweep range")->capture_default_str();
  verify->add_option("--seed", opt.seed, "First random seed")->capture_default_str();
  verify->add_option("--size", opt.size, "Band limit of random lab fields")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error maps to 1
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*run) return cmd_run(config);
    if (*resume) return cmd_resume(checkpoint, config);
    if (*fit) return cmd_fit_radius(checkpoint, s);
    if (*verify) return cmd_verify(suite, opt);
  } catch (const gmhd::NumericalAbort& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gmhd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
