#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subcover/experiment.hpp"

namespace {

using subcover::ExperimentConfig;

struct CliState {
  ExperimentConfig cfg;
  std::string out_path;
  std::string mode;  // subcommand name
};

void add_dataset_options(CLI::App* sub, CliState& s) {
  sub->add_option("--dataset", s.cfg.dataset_spec,
                  "snap:PATH | corpus:PATH | corpus+cost:PATH | "
                  "synth:{er,coverage,modular}:k=v,...")
      ->required();
  sub->add_option("--cost-file", s.cfg.cost_file, "per-element costs, 'id<TAB>cost' lines");
  sub->add_option("--gamma-div", s.cfg.gamma_div_override,
                  "diversity penalty weight for corpus datasets (default: calibrated so "
                  "coverage and penalty balance over the full corpus)");
  sub->add_flag("--literal-similarity", s.cfg.literal_similarity,
                "corpus similarity as union/intersection instead of Jaccard");
  sub->add_option("--reps", s.cfg.reps, "repetitions for randomized subroutines")
      ->default_val(50);
  sub->add_option("--seed", s.cfg.seed, "random seed")->default_val(1);
  sub->add_option("--out", s.out_path, "CSV output path (default: stdout)");
  sub->add_flag("--timings", s.cfg.timings, "emit real wall_ms (breaks byte-identical output)");
}

void add_solver_options(CLI::App* sub, CliState& s) {
  sub->add_option("--usm", s.cfg.usm_name,
                  "unconstrained maximization subroutine: dg | dg-det | rs | ls | exact");
  sub->add_flag("--require-feasible", s.cfg.require_feasible,
                "exit 4 if any cell misses its certification bar");
}

int dispatch(CliState& s) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!s.out_path.empty()) {
    file.open(s.out_path);
    if (!file) throw std::runtime_error("cannot write " + s.out_path);
    os = &file;
  }

  if (s.mode == "baseline") {
    subcover::Dataset d =
        subcover::open_dataset(s.cfg.dataset_spec, s.cfg.cost_file, s.cfg.gamma_div_override,
                               s.cfg.literal_similarity);
    subcover::BaselineResult base = subcover::run_baseline(d, s.cfg.reps, s.cfg.seed);
    subcover::write_csv_header(*os);
    subcover::write_baseline_row(*os, d.label, d.universe.size(), base, s.cfg.timings,
                                 s.cfg.seed);
    return 0;
  }

  int failures = subcover::run_experiment(s.cfg, *os);
  if (s.cfg.require_feasible && failures > 0) {
    std::cerr << failures << " cell(s) missed the certification bar or errored\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Streaming bicriteria solvers for submodular cover and budget-constrained "
      "submodular maximization, with query-counting instrumentation and a CSV "
      "experiment harness"};
  app.require_subcommand(1);

  CliState s;
  double epsilon = 0.0, tau = 0.0, tau_frac = 0.0;

  CLI::App* baseline = app.add_subcommand(
      "baseline", "best-of-R randomized double greedy over the whole dataset");
  add_dataset_options(baseline, s);

  CLI::App* cm = app.add_subcommand(
      "cover-multi", "multi-pass cover: geometric guess ladder, one buffered pass per guess");
  add_dataset_options(cm, s);
  add_solver_options(cm, s);
  cm->add_option("--epsilon", epsilon, "accuracy knob in (0, 1)")->required();
  auto* cm_tau = cm->add_option("--tau", tau, "coverage target");
  cm->add_option("--tau-frac", tau_frac, "coverage target as a fraction of the baseline value")
      ->excludes(cm_tau);

  CLI::App* cs = app.add_subcommand(
      "cover-single", "one-pass cover: parallel guesses inside a tightening window");
  add_dataset_options(cs, s);
  add_solver_options(cs, s);
  cs->add_option("--epsilon", epsilon, "accuracy knob in (0, 1)")->required();
  auto* cs_tau = cs->add_option("--tau", tau, "coverage target");
  cs->add_option("--tau-frac", tau_frac, "coverage target as a fraction of the baseline value")
      ->excludes(cs_tau);
  auto* cs_ub =
      cs->add_option("--upper-bound", s.cfg.upper_bound, "known upper bound on the optimal cost");
  cs->add_flag("--auto-upper-bound", s.cfg.auto_upper_bound,
               "use total dataset cost as the upper bound (adds a labeled preliminary pass)")
      ->excludes(cs_ub);

  CLI::App* km = app.add_subcommand(
      "kcsm-single-max",
      "one-pass budgeted maximization: parallel value guesses, budget may be exceeded by "
      "the stored-cost factor");
  add_dataset_options(km, s);
  add_solver_options(km, s);
  km->add_option("--epsilon", epsilon, "accuracy knob in (0, 1)")->required();
  auto* km_kappa = km->add_option("--kappa", s.cfg.kappa, "budget");
  km->add_option("--kappa-frac", s.cfg.kappa_frac, "budget as a fraction of total dataset cost")
      ->excludes(km_kappa);

  CLI::App* sw = app.add_subcommand("sweep", "grid of (algorithm, epsilon, target) cells");
  add_dataset_options(sw, s);
  add_solver_options(sw, s);
  sw->add_option("--algo", s.cfg.algorithms, "multi | single | singlemax (repeatable)")
      ->required();
  sw->add_option("--epsilon", s.cfg.epsilons, "accuracy knobs (repeatable)")->required();
  sw->add_option("--tau", s.cfg.taus, "coverage targets (repeatable)");
  sw->add_option("--tau-frac", s.cfg.tau_fracs,
                 "coverage targets as fractions of the baseline value (repeatable)");
  auto* sw_ub =
      sw->add_option("--upper-bound", s.cfg.upper_bound, "known upper bound on the optimal cost");
  sw->add_flag("--auto-upper-bound", s.cfg.auto_upper_bound,
               "use total dataset cost as the upper bound (adds a labeled preliminary pass)")
      ->excludes(sw_ub);
  sw->add_option("--kappa", s.cfg.kappa, "budget for singlemax");
  sw->add_option("--kappa-frac", s.cfg.kappa_frac, "budget as a fraction of total dataset cost");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* picked = app.get_subcommands().front();
  s.mode = picked->get_name();
  if (s.mode == "cover-multi") s.cfg.algorithms = {"multi"};
  if (s.mode == "cover-single") s.cfg.algorithms = {"single"};
  if (s.mode == "kcsm-single-max") s.cfg.algorithms = {"singlemax"};
  if (s.mode != "baseline" && s.mode != "sweep") {
    s.cfg.epsilons = {epsilon};
    if (cm_tau->count() || cs_tau->count()) s.cfg.taus = {tau};
    if (tau_frac > 0.0) s.cfg.tau_fracs = {tau_frac};
  }

  try {
    return dispatch(s);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
