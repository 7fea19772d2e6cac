#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "subcover/kcsm.hpp"
#include "support.hpp"

using namespace subcover;
using namespace testsupport;

TEST_SUITE("kcsm") {

TEST_CASE("budgeted one-pass driver reproduces the worked fixture") {
  auto f = fixture_oracle();
  CostedUniverse uni = fixture_universe();
  TraceSink trace;
  SingleMaxOptions opts;
  opts.trace = &trace;
  BicriteriaSolution sol =
      single_max(KcsmInstance{uni, *f, 2.0}, 0.5, parse_usm("exact", 1, 0), opts);

  CHECK(sol.set == std::vector<ElementId>{0, 1, 2});
  CHECK(sol.value == 6.0);
  CHECK(sol.cost == 3.0);
  CHECK(sol.feasible);
  CHECK(sol.certified_guess == doctest::Approx(3.375));

  // Value guesses 3.375 .. 17.09 (powers of 1.5 between the best singleton
  // density 3 and 2*3*kappa/eps = 24).
  CHECK(trace_string(trace) ==
        "a0>0@3.375 a0>0@5.0625 a0>0@7.59375 a0>0@11.3906 a0>0@17.0859 "
        "a1>0@3.375 a1>0@5.0625 a1>0@7.59375 a1>0@11.3906 r1@17.0859 "
        "a2>0@3.375 a2>0@5.0625 a2>0@7.59375 r2@11.3906 r2@17.0859");

  const RunMetrics& m = sol.metrics;
  CHECK(m.queries == 58);
  CHECK(m.per_element_queries == std::vector<std::uint64_t>{6, 9, 12});
  CHECK(m.usm_runs == 5);
  CHECK(m.peak_stored_cost == 12.0);
  CHECK(m.stored_cost_trace == std::vector<double>{5.0, 9.0, 12.0});
  CHECK(m.window_trace == std::vector<std::pair<int, int>>{{3, 7}, {3, 7}, {3, 7}});
  CHECK(m.final_lower_bound == doctest::Approx(3.0));
  CHECK(m.final_upper_bound == doctest::Approx(24.0));
  CHECK(m.stream_passes == 1);
  CHECK(m.prelim_passes == 0);
  CHECK(m.elements_consumed == 3);
}

TEST_CASE("single affordable element is picked up") {
  auto f = make_modular({3.0});
  CostedUniverse uni = CostedUniverse::uniform(1);
  BicriteriaSolution sol = single_max(KcsmInstance{uni, *f, 1.0}, 0.5, parse_usm("exact", 1, 0));
  CHECK(sol.set == std::vector<ElementId>{0});
  CHECK(sol.value == 3.0);
  CHECK(sol.cost == 1.0);
  CHECK(sol.feasible);
}

TEST_CASE("a budget below every element cost yields the empty set") {
  auto f = fixture_oracle();
  CostedUniverse uni = fixture_universe();
  BicriteriaSolution sol = single_max(KcsmInstance{uni, *f, 0.25}, 0.5, parse_usm("exact", 1, 0));
  CHECK(sol.set.empty());
  CHECK(sol.value == 0.0);
  CHECK(sol.cost == 0.0);
  CHECK(sol.feasible);
  // Every element passed through the cost gate without an oracle scan.
  CHECK(sol.metrics.marginal_gains == 0);
}

TEST_CASE("driver validates its arguments") {
  auto f = fixture_oracle();
  CostedUniverse uni = fixture_universe();
  UsmAlgorithm usm = parse_usm("exact", 1, 0);
  CHECK_THROWS_AS(single_max(KcsmInstance{uni, *f, 0.0}, 0.5, usm), std::invalid_argument);
  CHECK_THROWS_AS(single_max(KcsmInstance{uni, *f, -1.0}, 0.5, usm), std::invalid_argument);
  CHECK_THROWS_AS(single_max(KcsmInstance{uni, *f, kInf}, 0.5, usm), std::invalid_argument);
  CHECK_THROWS_AS(single_max(KcsmInstance{uni, *f, 2.0}, 0.0, usm), std::invalid_argument);
  CHECK_THROWS_AS(single_max(KcsmInstance{uni, *f, 2.0}, 1.0, usm), std::invalid_argument);
  CostedUniverse wrong = CostedUniverse::uniform(2);
  CHECK_THROWS_AS(single_max(KcsmInstance{wrong, *f, 2.0}, 0.5, usm), std::invalid_argument);
}

TEST_CASE("a full buffer freezes its guess exactly once") {
  // kappa 0.5 at eps 0.5 caps buffers at 2; four half-cost admissions reach
  // it and the fifth element trips the freeze.
  auto f = make_modular({5.0, 5.0, 5.0, 5.0, 5.0, 5.0});
  CostedUniverse uni(identity_pool(6), std::vector<double>(6, 0.5));
  TraceSink trace;
  SingleMaxOptions opts;
  opts.trace = &trace;
  BicriteriaSolution sol =
      single_max(KcsmInstance{uni, *f, 0.5}, 0.5, parse_usm("exact", 1, 0), opts);

  int frozen_events = 0;
  for (const TraceEvent& ev : trace)
    if (ev.kind == TraceEvent::Kind::kFrozen) ++frozen_events;
  // One freeze per live guess, never repeated on later elements.
  CHECK(frozen_events > 0);
  int guesses = sol.metrics.window_trace.empty()
                    ? 0
                    : sol.metrics.window_trace.back().second -
                          sol.metrics.window_trace.back().first + 1;
  CHECK(frozen_events == guesses);
  // Frozen guesses still feed the final subroutine pass.
  CHECK(sol.metrics.usm_runs == static_cast<std::uint64_t>(guesses));
  CHECK(sol.value > 0.0);
}

TEST_CASE("a density record discards low guesses and spawns high ones") {
  auto f = make_modular({1.0, 10.0});
  CostedUniverse uni = CostedUniverse::uniform(2);
  BicriteriaSolution sol = single_max(KcsmInstance{uni, *f, 1.0}, 0.5, parse_usm("exact", 1, 0));

  // Element 0 (density 1) opens window [0, 3]; element 1 (density 10) moves
  // it to [6, 9] wholesale.
  REQUIRE(sol.metrics.window_trace.size() == 2);
  CHECK(sol.metrics.window_trace[0] == std::pair<int, int>{0, 3});
  CHECK(sol.metrics.window_trace[1] == std::pair<int, int>{6, 9});
  CHECK(sol.value == 10.0);
  CHECK(sol.set == std::vector<ElementId>{1});
  CHECK(sol.metrics.final_lower_bound == doctest::Approx(10.0));
  CHECK(sol.metrics.final_upper_bound == doctest::Approx(40.0));
}

TEST_CASE("overlapping window shift keeps surviving buffers") {
  auto f = make_modular({1.0, 2.0});
  CostedUniverse uni = CostedUniverse::uniform(2);
  BicriteriaSolution sol = single_max(KcsmInstance{uni, *f, 1.0}, 0.5, parse_usm("exact", 1, 0));
  REQUIRE(sol.metrics.window_trace.size() == 2);
  CHECK(sol.metrics.window_trace[0] == std::pair<int, int>{0, 3});
  CHECK(sol.metrics.window_trace[1] == std::pair<int, int>{2, 5});
  // Guesses 2 and 3 survived the shift with element 0 still buffered.
  CHECK(sol.value == 3.0);
  CHECK(sol.set == std::vector<ElementId>{0, 1});
}

TEST_CASE("the window lower edge never moves down") {
  auto suite = kcsm_suite(15, 31000);
  for (const KcsmCase& c : suite) {
    BicriteriaSolution sol =
        single_max(KcsmInstance{c.universe, *c.oracle, c.kappa}, 0.5, parse_usm("dg-det", 1, 0));
    int prev_lo = 0;
    bool have = false;
    for (auto [lo, hi] : sol.metrics.window_trace) {
      if (hi < lo) continue;
      if (have) CHECK(lo >= prev_lo);
      prev_lo = lo;
      have = true;
    }
  }
}

TEST_CASE("returned value is an exact oracle evaluation of the returned set") {
  auto suite = kcsm_suite(15, 32000);
  for (const KcsmCase& c : suite) {
    BicriteriaSolution sol =
        single_max(KcsmInstance{c.universe, *c.oracle, c.kappa}, 0.5, parse_usm("exact", 1, 0));
    CHECK(sol.feasible);
    CHECK(sol.value == doctest::Approx(c.oracle->value(sol.set)).epsilon(1e-12));
    CHECK(sol.cost == doctest::Approx(c.universe.total_cost_of(sol.set)).epsilon(1e-12));
    // Bicriteria cost overshoot stays within the stored-cost factor.
    CHECK(sol.cost <= 17.0 * c.kappa + 1e-9);
  }
}

}  // TEST_SUITE
