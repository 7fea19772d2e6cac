#include "subcover/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "subcover/bounds.hpp"
#include "subcover/cover.hpp"
#include "subcover/kcsm.hpp"

namespace subcover {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::unordered_map<std::string, std::string> parse_kv(const std::string& body,
                                                      const std::string& spec) {
  std::unordered_map<std::string, std::string> kv;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string tok = body.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!tok.empty()) {
      std::size_t eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("dataset spec '" + spec + "': expected key=value, got '" +
                                    tok + "'");
      if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
        throw std::invalid_argument("dataset spec '" + spec + "': duplicate key '" +
                                    tok.substr(0, eq) + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return kv;
}

double parse_num(const std::string& v, const std::string& spec) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("dataset spec '" + spec + "': bad number '" + v + "'");
  }
}

SynthSpec parse_synth(const std::string& kind, const std::string& body, const std::string& spec) {
  SynthSpec s;
  if (kind == "er") s.kind = SynthKind::kErGraph;
  else if (kind == "coverage") s.kind = SynthKind::kCoverage;
  else if (kind == "modular") s.kind = SynthKind::kModular;
  else throw std::invalid_argument("dataset spec '" + spec + "': unknown synthetic kind '" + kind + "'");

  for (auto& [k, v] : parse_kv(body, spec)) {
    if (k == "n") s.n = static_cast<std::size_t>(parse_num(v, spec));
    else if (k == "p") s.edge_prob = parse_num(v, spec);
    else if (k == "seed") s.seed = static_cast<std::uint64_t>(parse_num(v, spec));
    else if (k == "vocab") s.vocab = static_cast<std::size_t>(parse_num(v, spec));
    else if (k == "tags") s.tags_per_item = static_cast<std::size_t>(parse_num(v, spec));
    else if (k == "shuffle") s.shuffle_order = parse_num(v, spec) != 0.0;
    else if (k == "costs") {
      std::size_t colon = v.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("dataset spec '" + spec + "': costs wants lo:hi");
      s.cost_lo = parse_num(v.substr(0, colon), spec);
      s.cost_hi = parse_num(v.substr(colon + 1), spec);
    } else {
      throw std::invalid_argument("dataset spec '" + spec + "': unknown key '" + k + "'");
    }
  }
  return s;
}

CostedUniverse identity_universe(std::size_t n, std::vector<double> costs) {
  std::vector<ElementId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<ElementId>(i);
  return CostedUniverse(std::move(order), std::move(costs));
}

}  // namespace

Dataset open_dataset(const std::string& spec, const std::string& cost_file,
                     double gamma_div_override, bool literal_similarity) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("dataset spec '" + spec +
                                "' (want snap:, corpus:, corpus+cost:, or synth:)");
  std::string scheme = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  if (scheme == "snap") {
    SnapLoadResult g = load_snap_graph(rest);
    std::size_t n = g.graph.vertex_count;
    std::vector<double> costs(n, 1.0);
    if (!cost_file.empty()) costs = load_cost_file_int(cost_file, g.id_map, n);
    return Dataset{std::make_unique<GraphCutOracle>(std::move(g.graph)),
                   identity_universe(n, std::move(costs)), spec};
  }

  if (scheme == "corpus" || scheme == "corpus+cost") {
    CorpusLoadResult c = load_tagged_corpus(rest, scheme == "corpus+cost");
    if (scheme == "corpus+cost" && !cost_file.empty())
      throw std::invalid_argument("cost file and corpus cost column both given");
    std::size_t n = c.corpus.size();
    std::vector<double> costs = std::move(c.costs);
    if (!cost_file.empty()) costs = load_cost_file(cost_file, c.item_map, n);
    c.corpus.similarity =
        literal_similarity ? SimilarityMode::kInverseJaccard : SimilarityMode::kJaccard;
    c.corpus.gamma_div =
        gamma_div_override >= 0.0 ? gamma_div_override : default_gamma_div(c.corpus);
    return Dataset{std::make_unique<DiverseSummaryOracle>(std::move(c.corpus)),
                   identity_universe(n, std::move(costs)), spec};
  }

  if (scheme == "synth") {
    if (!cost_file.empty())
      throw std::invalid_argument("cost files apply to file-backed datasets only");
    std::size_t colon2 = rest.find(':');
    std::string kind = rest.substr(0, colon2 == std::string::npos ? rest.size() : colon2);
    std::string body = colon2 == std::string::npos ? "" : rest.substr(colon2 + 1);
    SynthInstance inst = synth_instance(parse_synth(kind, body, spec));
    return Dataset{std::move(inst.oracle), std::move(inst.universe), spec};
  }

  throw std::invalid_argument("dataset spec '" + spec +
                              "' (want snap:, corpus:, corpus+cost:, or synth:)");
}

BaselineResult run_baseline(const Dataset& d, int reps, std::uint64_t seed) {
  InstrumentedOracle f(*d.oracle);
  UsmAlgorithm usm;
  usm.kind = UsmKind::kDoubleGreedyRand;
  usm.repetitions = reps;
  usm.seed = seed;

  auto t0 = std::chrono::steady_clock::now();
  UsmResult r = usm.run(f, d.universe.order());
  BaselineResult out;
  out.set = std::move(r.set);
  out.f0 = r.value;
  out.c0 = d.universe.total_cost_of(out.set);
  out.q0 = f.queries();
  out.wall_ms = elapsed_ms(t0);
  return out;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "dataset",          "algorithm",      "usm",
      "epsilon",          "tau_abs",        "tau_norm",
      "f",                "f_norm",         "cost",
      "cost_norm",        "queries",        "queries_norm",
      "passes",           "peak_stored_cost", "peak_stored_norm",
      "feasible",         "seed",           "wall_ms",
      "kappa",            "upper_bound",    "certified_guess",
      "value_bound",      "queries_uncached", "marginal_gains",
      "usm_runs",         "stream_passes",  "prelim_passes",
      "elements_consumed", "set_size",      "baseline_f0",
      "baseline_c0",      "baseline_q0",    "bound_cost",
      "bound_queries",    "bound_peak_stored", "bound_passes",
      "error"};
  return cols;
}

std::string default_usm_for(const std::string& algorithm) {
  return algorithm == "single" ? "rs" : "dg";
}

void write_csv_header(std::ostream& out) {
  std::string header;
  for (const std::string& c : csv_columns()) {
    if (!header.empty()) header += ',';
    header += c;
  }
  out << header << '\n';
}

void write_baseline_row(std::ostream& out, const std::string& dataset, std::size_t n,
                        const BaselineResult& base, bool timings, std::uint64_t seed) {
  BicriteriaSolution bsol;
  bsol.set = base.set;
  bsol.value = base.f0;
  bsol.cost = base.c0;
  bsol.feasible = true;
  bsol.metrics.queries = base.q0;
  bsol.metrics.queries_uncached = base.q0;
  bsol.metrics.usm_runs = 1;
  bsol.metrics.stream_passes = 1;
  bsol.metrics.elements_consumed = n;
  bsol.metrics.wall_ms = base.wall_ms;
  append_csv_row(out, dataset, "baseline", "dg", 0.0, 0.0, 0.0, 0.0, n, bsol, &base, nullptr,
                 timings, seed, "");
}

void append_csv_row(std::ostream& out, const std::string& dataset, const std::string& algorithm,
                    const std::string& usm, double epsilon, double tau_abs, double kappa,
                    double upper_bound, std::size_t n, const BicriteriaSolution& sol,
                    const BaselineResult* baseline, const BoundReport* bounds, bool timings,
                    std::uint64_t seed, const std::string& error) {
  const RunMetrics& m = sol.metrics;
  double f0 = baseline ? baseline->f0 : 0.0;
  double c0 = baseline ? baseline->c0 : 0.0;
  double q0 = baseline ? static_cast<double>(baseline->q0) : 0.0;
  auto norm = [](double v, double d) { return d > 0.0 ? v / d : 0.0; };

  std::string row;
  auto add = [&row](const std::string& field) {
    if (!row.empty()) row += ',';
    row += field;
  };
  add(csv_escape(dataset));
  add(csv_escape(algorithm));
  add(csv_escape(usm));
  add(fmt_double(epsilon));
  add(fmt_double(tau_abs));
  add(fmt_double(norm(tau_abs, f0)));
  add(fmt_double(sol.value));
  add(fmt_double(norm(sol.value, f0)));
  add(fmt_double(sol.cost));
  add(fmt_double(norm(sol.cost, c0)));
  add(std::to_string(m.queries));
  add(fmt_double(norm(static_cast<double>(m.queries), q0)));
  add(std::to_string(m.total_passes()));
  add(fmt_double(m.peak_stored_cost));
  add(fmt_double(norm(m.peak_stored_cost, static_cast<double>(n))));
  add(sol.feasible ? "1" : "0");
  add(std::to_string(seed));
  add(fmt_double(timings ? m.wall_ms : 0.0));
  add(fmt_double(kappa));
  add(fmt_double(upper_bound));
  add(fmt_double(sol.certified_guess));
  add(fmt_double(sol.value_bound));
  add(std::to_string(m.queries_uncached));
  add(std::to_string(m.marginal_gains));
  add(std::to_string(m.usm_runs));
  add(std::to_string(m.stream_passes));
  add(std::to_string(m.prelim_passes));
  add(std::to_string(m.elements_consumed));
  add(std::to_string(sol.set.size()));
  add(fmt_double(f0));
  add(fmt_double(c0));
  add(fmt_double(q0));
  add(fmt_double(bounds ? bounds->cost_bound : 0.0));
  add(fmt_double(bounds ? bounds->query_bound : 0.0));
  add(fmt_double(bounds ? bounds->peak_stored_bound : 0.0));
  add(fmt_double(bounds ? bounds->pass_bound : 0.0));
  add(csv_escape(error));
  out << row << '\n';
}

namespace {

struct Cell {
  std::string algorithm;
  double epsilon = 0.0;
  double tau = 0.0;    // cover cells
  double kappa = 0.0;  // budget cells
};

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& csv) {
  if (cfg.epsilons.empty()) throw std::invalid_argument("no epsilon values given");
  if (cfg.algorithms.empty()) throw std::invalid_argument("no algorithms given");
  for (const std::string& a : cfg.algorithms)
    if (a != "multi" && a != "single" && a != "singlemax")
      throw std::invalid_argument("unknown algorithm '" + a +
                                  "' (expected multi, single, singlemax)");
  for (double e : cfg.epsilons)
    if (!(e > 0.0) || !(e < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!cfg.usm_name.empty()) parse_usm(cfg.usm_name, cfg.reps, cfg.seed);  // fail fast

  bool wants_cover = false, wants_budget = false;
  for (const std::string& a : cfg.algorithms) {
    if (a == "singlemax") wants_budget = true;
    else wants_cover = true;
    if (a == "single" && !(cfg.upper_bound > 0.0) && !cfg.auto_upper_bound)
      throw std::invalid_argument("single needs --upper-bound or --auto-upper-bound");
  }
  if (wants_cover && cfg.taus.empty() && cfg.tau_fracs.empty())
    throw std::invalid_argument("cover algorithms need --tau or --tau-frac");
  if (wants_budget && !(cfg.kappa > 0.0) && !(cfg.kappa_frac > 0.0))
    throw std::invalid_argument("singlemax needs --kappa or --kappa-frac");

  Dataset d = open_dataset(cfg.dataset_spec, cfg.cost_file, cfg.gamma_div_override,
                           cfg.literal_similarity);
  InstanceStats stats = compute_instance_stats(d.universe, *d.oracle);

  write_csv_header(csv);
  BaselineResult base = run_baseline(d, cfg.reps, cfg.seed);
  write_baseline_row(csv, d.label, d.universe.size(), base, cfg.timings, cfg.seed);

  std::vector<double> taus = cfg.taus;
  for (double frac : cfg.tau_fracs) {
    if (!(frac > 0.0)) throw std::invalid_argument("tau fractions must be positive");
    taus.push_back(frac * base.f0);
  }
  double kappa = cfg.kappa > 0.0 ? cfg.kappa : cfg.kappa_frac * d.universe.total_cost();

  std::vector<Cell> cells;
  for (const std::string& a : cfg.algorithms) {
    for (double e : cfg.epsilons) {
      if (a == "singlemax") {
        cells.push_back({a, e, 0.0, kappa});
      } else {
        for (double t : taus) cells.push_back({a, e, t, 0.0});
      }
    }
  }

  int failures = 0;
  for (const Cell& cell : cells) {
    UsmAlgorithm usm = parse_usm(
        cfg.usm_name.empty() ? default_usm_for(cell.algorithm) : cfg.usm_name, cfg.reps,
        cfg.seed);
    BicriteriaSolution sol;
    std::string error;
    double upper = cfg.upper_bound;
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (cell.algorithm == "multi") {
        sol = multi(CoverInstance{d.universe, *d.oracle, cell.tau}, cell.epsilon, usm);
      } else if (cell.algorithm == "single") {
        if (cfg.auto_upper_bound) upper = d.universe.total_cost();
        sol = single(CoverInstance{d.universe, *d.oracle, cell.tau}, cell.epsilon, upper, usm);
        if (cfg.auto_upper_bound) sol.metrics.prelim_passes += 1;
      } else {
        sol = single_max(KcsmInstance{d.universe, *d.oracle, cell.kappa}, cell.epsilon, usm);
      }
    } catch (const std::exception& e) {
      sol = BicriteriaSolution{};
      error = e.what();
    }
    sol.metrics.wall_ms = elapsed_ms(t0);

    BoundReport report;
    bool have_bounds = false;
    if (error.empty()) {
      try {
        if (cell.algorithm == "singlemax") {
          report = single_max_bounds(stats, cell.epsilon, cell.kappa, usm);
          have_bounds = true;
        } else {
          double x = sol.certified_guess > 0.0
                         ? sol.certified_guess
                         : (cell.algorithm == "single" ? upper : 0.0);
          if (x > 0.0 && cell.tau > 0.0) {
            report = cell.algorithm == "multi"
                         ? multi_bounds(stats, cell.epsilon, x, usm)
                         : single_bounds(stats, cell.epsilon, cell.tau, x, usm);
            have_bounds = true;
          }
        }
      } catch (const std::exception& e) {
        error = e.what();
      }
    }

    if (!error.empty() || !sol.feasible) ++failures;
    append_csv_row(csv, d.label, cell.algorithm, usm.name(), cell.epsilon, cell.tau, cell.kappa,
                   cell.algorithm == "single" ? upper : 0.0, d.universe.size(), sol, &base,
                   have_bounds ? &report : nullptr, cfg.timings, cfg.seed, error);
  }
  return failures;
}

}  // namespace subcover
