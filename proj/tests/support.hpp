#pragma once

// Shared fixtures for the test suites: seeded instance generators, reference
// solvers written independently of the library's enumeration code (Gray-code
// subset order instead of binary counting), and trace formatting helpers.

#include <bit>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "subcover/core.hpp"
#include "subcover/cover.hpp"
#include "subcover/ingest.hpp"
#include "subcover/kcsm.hpp"
#include "subcover/objectives.hpp"
#include "subcover/oracle.hpp"
#include "subcover/solution.hpp"
#include "subcover/universe.hpp"
#include "subcover/usm.hpp"

namespace testsupport {

using namespace subcover;

// ---------------------------------------------------------------------------
// The worked three-element fixture: modular values {3, 2, 1}, unit costs.

inline std::unique_ptr<ModularOracle> fixture_oracle() {
  return make_modular({3.0, 2.0, 1.0});
}

inline CostedUniverse fixture_universe() { return CostedUniverse::uniform(3); }

// ---------------------------------------------------------------------------
// Reference answers by Gray-code sweep. Each step flips exactly one element,
// so these visit subsets in a different order than the library's binary-mask
// loops; agreement between the two is evidence against a shared enumeration
// bug. Ties resolve to the first subset found in Gray order, so cross-checks
// compare values and costs, not the chosen sets.

struct RefAnswer {
  std::vector<ElementId> set;
  double value = 0.0;
  double cost = 0.0;
  bool feasible = false;
};

namespace detail {

// Calls visit(sorted subset of `pool`) for all 2^|pool| subsets.
template <typename Visit>
void gray_sweep(ElementSpan pool, Visit&& visit) {
  std::vector<char> in(pool.size(), 0);
  std::vector<ElementId> cur;
  auto rebuild = [&]() {
    cur.clear();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (in[i]) cur.push_back(pool[i]);
  };
  visit(static_cast<ElementSpan>(cur));
  const std::uint64_t total = 1ull << pool.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    std::size_t flip = static_cast<std::size_t>(std::countr_zero(k));
    in[flip] ^= 1;
    rebuild();
    visit(static_cast<ElementSpan>(cur));
  }
}

}  // namespace detail

// Minimum-cost subset of `pool` with f >= tau.
inline RefAnswer ref_sc_opt(const SubmodularOracle& f, const CostedUniverse& u, double tau,
                            ElementSpan pool) {
  RefAnswer best;
  detail::gray_sweep(pool, [&](ElementSpan x) {
    double v = f.value(x);
    if (v < tau) return;
    double c = u.total_cost_of(x);
    if (!best.feasible || c < best.cost) {
      best.set.assign(x.begin(), x.end());
      best.value = v;
      best.cost = c;
      best.feasible = true;
    }
  });
  return best;
}

// Maximum-value subset of `pool` with cost <= kappa.
inline RefAnswer ref_kcsm_opt(const SubmodularOracle& f, const CostedUniverse& u, double kappa,
                              ElementSpan pool) {
  RefAnswer best;
  bool have = false;
  detail::gray_sweep(pool, [&](ElementSpan x) {
    double c = u.total_cost_of(x);
    if (c > kappa) return;
    double v = f.value(x);
    if (!have || v > best.value) {
      best.set.assign(x.begin(), x.end());
      best.value = v;
      best.cost = c;
      have = true;
    }
  });
  best.feasible = have;
  return best;
}

// Unconstrained maximum over subsets of `pool`.
inline double ref_max_value(const SubmodularOracle& f, ElementSpan pool) {
  double best = -kInf;
  detail::gray_sweep(pool, [&](ElementSpan x) {
    double v = f.value(x);
    if (v > best) best = v;
  });
  return best;
}

inline std::vector<ElementId> identity_pool(std::size_t n) {
  std::vector<ElementId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<ElementId>(i);
  return pool;
}

// ---------------------------------------------------------------------------
// Seeded instance suites. Kinds rotate modular / coverage / cut; sizes cycle
// through 6..12 so every suite mixes objective shapes and ground sizes.

struct ScCase {
  std::unique_ptr<SubmodularOracle> oracle;
  CostedUniverse universe;
  double tau = 0.0;
  RefAnswer opt;  // Gray-code reference optimum
  std::string kind;
};

struct KcsmCase {
  std::unique_ptr<SubmodularOracle> oracle;
  CostedUniverse universe;
  double kappa = 0.0;
  RefAnswer opt;
  std::string kind;
};

namespace detail {

inline std::unique_ptr<SubmodularOracle> draw_oracle(std::size_t kind, std::size_t n, Rng& rng,
                                                     std::string* label) {
  switch (kind % 3) {
    case 0: {
      *label = "modular";
      std::vector<double> vals(n);
      for (double& v : vals) v = rng.next_range(0.5, 4.0);
      return make_modular(std::move(vals));
    }
    case 1: {
      *label = "coverage";
      std::size_t vocab = 2 * n;
      std::vector<std::vector<std::int32_t>> tags(n);
      for (auto& t : tags) {
        std::size_t k = 1 + rng.next_below(4);
        for (std::size_t j = 0; j < k; ++j)
          t.push_back(static_cast<std::int32_t>(rng.next_below(vocab)));
      }
      return std::make_unique<CoverageOracle>(std::move(tags), vocab);
    }
    default: {
      *label = "cut";
      return std::make_unique<GraphCutOracle>(synth_er_graph(n, 0.4, rng.next_u64()));
    }
  }
}

inline std::vector<double> draw_costs(std::size_t n, Rng& rng) {
  std::vector<double> costs(n);
  for (double& c : costs) c = rng.next_range(0.5, 2.0);
  return costs;
}

}  // namespace detail

// `count` cover instances with feasible targets: tau is a fraction of the
// unconstrained maximum, cycling 0.3 / 0.6 / 0.9.
inline std::vector<ScCase> sc_suite(std::size_t count, std::uint64_t seed0) {
  std::vector<ScCase> out;
  out.reserve(count);
  std::uint64_t salt = 0;
  while (out.size() < count) {
    std::size_t i = out.size();
    Rng rng(seed0 + 1000003ull * (i + salt));
    std::size_t n = 6 + i % 7;
    std::string kind;
    auto oracle = detail::draw_oracle(i, n, rng, &kind);
    auto pool = identity_pool(n);
    double max_f = ref_max_value(*oracle, pool);
    if (max_f < 1e-6) {  // cut graph came out edgeless; redraw
      ++salt;
      continue;
    }
    double frac = 0.3 + 0.3 * static_cast<double>(i % 3);
    double tau = frac * max_f;
    CostedUniverse uni(pool, detail::draw_costs(n, rng));
    RefAnswer opt = ref_sc_opt(*oracle, uni, tau, pool);
    out.push_back(ScCase{std::move(oracle), std::move(uni), tau, std::move(opt), kind});
  }
  return out;
}

// `count` budgeted-max instances; kappa is a fraction of the total cost,
// cycling 0.25 / 0.5 / 0.75.
inline std::vector<KcsmCase> kcsm_suite(std::size_t count, std::uint64_t seed0) {
  std::vector<KcsmCase> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(seed0 + 1000033ull * i);
    std::size_t n = 6 + i % 7;
    std::string kind;
    auto oracle = detail::draw_oracle(i, n, rng, &kind);
    auto pool = identity_pool(n);
    CostedUniverse uni(pool, detail::draw_costs(n, rng));
    double frac = 0.25 * (1.0 + static_cast<double>(i % 3));
    double kappa = frac * uni.total_cost();
    RefAnswer opt = ref_kcsm_opt(*oracle, uni, kappa, pool);
    out.push_back(KcsmCase{std::move(oracle), std::move(uni), kappa, std::move(opt), kind});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property sampling.

// One diminishing-returns check: draws A ⊆ B ⊆ V and x ∉ B, returns
// Δf(A,x) ≥ Δf(B,x) − tol. Four oracle evaluations.
inline bool submodular_triple(const SubmodularOracle& f, Rng& rng, double tol = 1e-9) {
  std::size_t n = f.ground_size();
  if (n == 0) return true;
  ElementId x = static_cast<ElementId>(rng.next_below(n));
  std::vector<ElementId> a, b;
  for (ElementId v = 0; v < static_cast<ElementId>(n); ++v) {
    if (v == x) continue;
    double r = rng.next_double();
    if (r < 0.25) {  // in A and B
      a.push_back(v);
      b.push_back(v);
    } else if (r < 0.55) {  // in B only
      b.push_back(v);
    }
  }
  double gain_a = marginal_gain(f, a, x);
  double gain_b = marginal_gain(f, b, x);
  return gain_a >= gain_b - tol;
}

// Uniform random subset of the ground set.
inline std::vector<ElementId> random_subset(std::size_t n, Rng& rng) {
  std::vector<ElementId> out;
  for (ElementId v = 0; v < static_cast<ElementId>(n); ++v)
    if (rng.next_bool()) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Trace formatting: one token per event, e.g. "a0>1@1" = element 0 admitted
// to buffer 1 at guess 1. Kinds use the TraceEvent letters.

inline std::string trace_string(const TraceSink& trace) {
  std::ostringstream out;
  bool first = true;
  for (const TraceEvent& ev : trace) {
    if (!first) out << ' ';
    first = false;
    out << static_cast<char>(ev.kind) << ev.element;
    if (ev.buffer >= 0) out << '>' << ev.buffer;
    out << '@' << ev.guess;
    if (ev.pass > 0) out << '#' << ev.pass;
  }
  return out.str();
}

}  // namespace testsupport
