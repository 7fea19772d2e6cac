#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subcover/bounds.hpp"
#include "subcover/core.hpp"
#include "subcover/ingest.hpp"
#include "subcover/oracle.hpp"
#include "subcover/solution.hpp"
#include "subcover/universe.hpp"
#include "subcover/usm.hpp"

namespace subcover {

// A loaded dataset ready to run: oracle + universe + a stable label.
struct Dataset {
  std::unique_ptr<SubmodularOracle> oracle;
  CostedUniverse universe;
  std::string label;
};

// Dataset spec grammar:
//   snap:PATH
//   corpus:PATH            (uniform costs)
//   corpus+cost:PATH       (cost column)
//   synth:er:n=..,p=..,seed=..[,costs=lo:hi][,shuffle=1]
//   synth:coverage:n=..,seed=..[,vocab=..][,tags=..][,costs=lo:hi][,shuffle=1]
//   synth:modular:n=..[,seed=..][,costs=lo:hi][,shuffle=1]
// Config errors throw std::invalid_argument; file/parse problems throw
// std::runtime_error.
Dataset open_dataset(const std::string& spec, const std::string& cost_file,
                     double gamma_div_override, bool literal_similarity);

struct BaselineResult {
  std::vector<ElementId> set;
  double f0 = 0.0;
  double c0 = 0.0;
  std::uint64_t q0 = 0;
  double wall_ms = 0.0;
};

// Reference point: best-of-R randomized double greedy over the whole ground
// set (R = reps), with its instrumented query count.
BaselineResult run_baseline(const Dataset& d, int reps, std::uint64_t seed);

struct ExperimentConfig {
  std::string dataset_spec;
  std::string cost_file;
  double gamma_div_override = -1.0;  // <0: corpus default
  bool literal_similarity = false;

  std::vector<std::string> algorithms;  // multi | single | singlemax
  std::string usm_name = "";            // empty: per-algorithm default
  int reps = 50;
  std::uint64_t seed = 1;

  std::vector<double> epsilons;
  std::vector<double> taus;        // absolute targets
  std::vector<double> tau_fracs;   // fractions of the baseline value
  double upper_bound = 0.0;        // single; 0 with auto_upper_bound unset → config error
  bool auto_upper_bound = false;   // single: labeled preliminary pass computing w(U)
  double kappa = 0.0;              // singlemax
  double kappa_frac = 0.0;         // singlemax: fraction of w(U)

  bool timings = false;            // emit real wall_ms (breaks byte-identity)
  bool require_feasible = false;
};

// CSV column names, in emission order. Normalized columns divide by the
// baseline (tau_norm, f_norm, cost_norm, queries_norm) or by the ground-set
// size (peak_stored_norm); the divisors ride along as baseline_* columns so
// plots never rerun the baseline.
const std::vector<std::string>& csv_columns();

// Per-algorithm default maximization subroutine (multi → dg, single → rs,
// singlemax → dg).
std::string default_usm_for(const std::string& algorithm);

// Runs baseline + the (algorithm × epsilon × tau) grid and streams CSV rows.
// Cell failures land in the error column and the run continues. Returns the
// number of infeasible or errored cells (for --require-feasible).
int run_experiment(const ExperimentConfig& cfg, std::ostream& csv);

void write_csv_header(std::ostream& out);

// Baseline reference as a CSV row (algorithm column "baseline").
void write_baseline_row(std::ostream& out, const std::string& dataset, std::size_t n,
                        const BaselineResult& base, bool timings, std::uint64_t seed);

// One row per solution, shared by sweep and the single-run subcommands.
// baseline and bounds may be null (norms and bound columns emit 0).
void append_csv_row(std::ostream& out, const std::string& dataset, const std::string& algorithm,
                    const std::string& usm, double epsilon, double tau_abs, double kappa,
                    double upper_bound, std::size_t n, const BicriteriaSolution& sol,
                    const BaselineResult* baseline, const BoundReport* bounds, bool timings,
                    std::uint64_t seed, const std::string& error);

}  // namespace subcover
