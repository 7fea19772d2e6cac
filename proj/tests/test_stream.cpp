#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "subcover/stream.hpp"
#include "support.hpp"

using namespace subcover;
using namespace testsupport;

namespace {

struct PassResult {
  StreamState state;
  bool closed = false;

  PassResult(const StreamParams& p, const InstrumentedOracle& f) : state(p, f) {}
};

// Feeds the whole stream order (stops early if an admission closes the pass).
OfferStatus feed_all(StreamState& state, const StreamParams& p, const InstrumentedOracle& f,
                     const CostedUniverse& u) {
  OfferStatus last = OfferStatus::kDiscardedBelowBar;
  for (ElementId e : u.order()) {
    last = stream_offer(state, p, f, u, e).status;
    if (last == OfferStatus::kAdmittedStreamClosed) break;
  }
  return last;
}

}  // namespace

TEST_SUITE("stream") {

TEST_CASE("pass parameters from the worked fixture") {
  StreamParams p(0.5, 5.0, 2.0);
  CHECK(p.bucket_count() == 4);
  CHECK(p.density_threshold() == doctest::Approx(0.625));
  CHECK(p.buffer_capacity() == doctest::Approx(8.0));

  StreamParams q(0.3, 5.0, 2.0);
  CHECK(q.bucket_count() == 7);  // ceil(2/0.3)
}

TEST_CASE("pass parameters reject out-of-range arguments") {
  CHECK_THROWS_AS(StreamParams(0.0, 5.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(StreamParams(1.0, 5.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(StreamParams(-0.5, 5.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(StreamParams(0.5, 0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(StreamParams(0.5, -1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(StreamParams(0.5, 5.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(StreamParams(0.5, 5.0, kInf), std::invalid_argument);
}

TEST_CASE("opening a pass evaluates the empty set once") {
  auto f = fixture_oracle();
  InstrumentedOracle wrapped(*f);
  StreamParams p(0.5, 5.0, 2.0);
  StreamState state(p, wrapped);
  CHECK(wrapped.queries() == 1);
  CHECK_FALSE(state.closed());
  CHECK(state.consumed() == 0);
  CHECK(state.buffers().bucket_count() == 4);
}

TEST_CASE("fixture pass at guess 2 admits everything to the first buffer") {
  auto f = fixture_oracle();
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni = fixture_universe();
  StreamParams p(0.5, 5.0, 2.0);
  StreamState state(p, wrapped);

  for (ElementId e : {0u, 1u, 2u}) {
    OfferResult r = stream_offer(state, p, wrapped, uni, e);
    CHECK(r.status == OfferStatus::kAdmitted);
    CHECK(r.buffer_index == 0);
  }
  CHECK(state.buffers().buffer(0) == std::vector<ElementId>{0, 1, 2});
  CHECK(state.buffers().buffer_value(0) == 6.0);
  CHECK(state.buffers().buffer_cost(0) == 3.0);
  CHECK(state.stored_cost() == 3.0);
  CHECK(state.peak_stored_cost() == 3.0);
  CHECK(state.marginal_gains() == 3);
  // One empty-set query plus one scan query per admission.
  CHECK(wrapped.queries() == 4);
}

TEST_CASE("fixture pass at guess 1 rejects the low-density element") {
  auto f = fixture_oracle();
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni = fixture_universe();
  StreamParams p(0.5, 5.0, 1.0);  // threshold 1.25
  StreamState state(p, wrapped);

  CHECK(stream_offer(state, p, wrapped, uni, 0).status == OfferStatus::kAdmitted);
  CHECK(stream_offer(state, p, wrapped, uni, 1).status == OfferStatus::kAdmitted);
  OfferResult r = stream_offer(state, p, wrapped, uni, 2);
  CHECK(r.status == OfferStatus::kDiscardedBelowBar);
  // The rejected element scanned all four buffers.
  CHECK(state.marginal_gains() == 2 + 4);
  CHECK(state.buffers().buffer(0) == std::vector<ElementId>{0, 1});
  CHECK(state.buffers().buffer(1).empty());
}

TEST_CASE("cost gate discards without any oracle query") {
  auto f = fixture_oracle();
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni({0, 1, 2}, {1.0, 5.0, 1.0});
  StreamParams p(0.5, 5.0, 2.0);
  StreamState state(p, wrapped);
  std::uint64_t before = wrapped.queries();
  OfferResult r = stream_offer(state, p, wrapped, uni, 1);  // cost 5 > guess 2
  CHECK(r.status == OfferStatus::kDiscardedCostGate);
  CHECK(wrapped.queries() == before);
  CHECK(state.consumed() == 1);
  CHECK(state.marginal_gains() == 0);
}

TEST_CASE("an admission past capacity closes the pass") {
  // Guess 0.5 at eps 0.5: capacity 2. Element costs 1.5 + 1.0 overflow it.
  auto f = make_modular({4.0, 4.0, 4.0});
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni({0, 1, 2}, {1.5, 1.0, 1.0});
  StreamParams p(0.5, 2.0, 1.6);  // capacity 6.4; threshold 0.3125
  StreamState state(p, wrapped);

  CHECK(stream_offer(state, p, wrapped, uni, 0).status == OfferStatus::kAdmitted);
  CHECK(stream_offer(state, p, wrapped, uni, 1).status == OfferStatus::kAdmitted);
  CHECK_FALSE(state.closed());

  // Five unit-cost admissions into one buffer overflow capacity 4.
  auto g = make_modular({4.0, 4.0, 4.0, 4.0, 4.0});
  InstrumentedOracle w2(*g);
  CostedUniverse cheap = CostedUniverse::uniform(5);
  StreamParams tight(0.5, 2.0, 1.0);  // capacity 4, threshold 0.5
  StreamState s2(tight, w2);
  for (ElementId e : {0u, 1u, 2u, 3u})
    CHECK(stream_offer(s2, tight, w2, cheap, e).status == OfferStatus::kAdmitted);
  OfferResult r = stream_offer(s2, tight, w2, cheap, 4);
  CHECK(r.status == OfferStatus::kAdmittedStreamClosed);
  CHECK(r.buffer_index == 0);
  CHECK(s2.closed());
  CHECK(s2.consumed() == 5);
  CHECK_THROWS_AS(stream_offer(s2, tight, w2, cheap, 4), std::logic_error);
}

TEST_CASE("an early-closed pass already holds a covering buffer") {
  // Admission thresholds sum past tau once a buffer overflows, so whenever a
  // pass closes early the returned value must reach the target.
  UsmAlgorithm usm = parse_usm("dg-det", 1, 0);
  int closed_seen = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(7000 + seed * 313);
    std::string kind;
    auto f = testsupport::detail::draw_oracle(seed, 8, rng, &kind);
    CostedUniverse uni(identity_pool(8), testsupport::detail::draw_costs(8, rng));
    double tau = 0.6 * ref_max_value(*f, identity_pool(8));
    if (tau <= 0.0) continue;
    for (double guess : {0.5, 1.0, 2.0}) {
      InstrumentedOracle wrapped(*f);
      StreamParams p(0.5, tau, guess);
      StreamState state(p, wrapped);
      feed_all(state, p, wrapped, uni);
      if (!state.closed()) continue;
      ++closed_seen;
      BicriteriaSolution sol = stream_finalize(state, p, wrapped, uni, usm);
      CHECK(sol.value >= tau - 1e-9);
    }
  }

  // Deterministic close: five unit-cost elements of value 4 against guess 1
  // admit one after another until the buffer passes capacity 4.
  auto flat = make_modular({4.0, 4.0, 4.0, 4.0, 4.0});
  CostedUniverse cheap = CostedUniverse::uniform(5);
  InstrumentedOracle wrapped(*flat);
  StreamParams p(0.5, 8.0, 1.0);
  StreamState state(p, wrapped);
  feed_all(state, p, wrapped, cheap);
  REQUIRE(state.closed());
  ++closed_seen;
  BicriteriaSolution sol = stream_finalize(state, p, wrapped, cheap, usm);
  CHECK(sol.value >= 8.0 - 1e-9);
  CHECK(closed_seen > 0);
}

TEST_CASE("finalize takes the best of subroutine output and buffers") {
  auto f = fixture_oracle();
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni = fixture_universe();
  StreamParams p(0.5, 5.0, 2.0);
  StreamState state(p, wrapped);
  feed_all(state, p, wrapped, uni);

  BicriteriaSolution sol = stream_finalize(state, p, wrapped, uni, parse_usm("exact", 1, 0));
  CHECK(sol.set == std::vector<ElementId>{0, 1, 2});
  CHECK(sol.value == 6.0);
  CHECK(sol.cost == 3.0);
  CHECK(sol.feasible);
  CHECK(sol.value_bound == doctest::Approx(2.5));  // 1.0 * (1 - 0.5) * 5
  CHECK(sol.certified_guess == 2.0);
  CHECK(sol.metrics.usm_runs == 1);
  CHECK(sol.metrics.stream_passes == 1);
  CHECK(sol.metrics.elements_consumed == 3);
  CHECK(sol.metrics.peak_stored_cost == 3.0);
}

TEST_CASE("finalize below the bar reports infeasible") {
  auto f = fixture_oracle();
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni = fixture_universe();
  StreamParams p(0.5, 40.0, 2.0);  // unreachable target
  StreamState state(p, wrapped);
  feed_all(state, p, wrapped, uni);
  BicriteriaSolution sol = stream_finalize(state, p, wrapped, uni, parse_usm("exact", 1, 0));
  CHECK_FALSE(sol.feasible);
  CHECK(sol.certified_guess == 0.0);
  CHECK(sol.value_bound == doctest::Approx(20.0));
}

TEST_CASE("buffers stay disjoint and admissions arrive in stream order") {
  Rng rng(88);
  GraphCutOracle f(synth_er_graph(10, 0.5, 31));
  InstrumentedOracle wrapped(f);
  CostedUniverse uni(identity_pool(10), testsupport::detail::draw_costs(10, rng));
  double tau = 0.5 * ref_max_value(f, identity_pool(10));
  StreamParams p(0.5, tau, 1.0);
  StreamState state(p, wrapped);
  feed_all(state, p, wrapped, uni);

  std::vector<int> where(10, -1);
  for (std::size_t j = 0; j < state.buffers().bucket_count(); ++j) {
    for (ElementId u : state.buffers().buffer(j)) {
      CHECK(where[u] == -1);
      where[u] = static_cast<int>(j);
    }
  }
  const auto& order = state.buffers().admitted_order();
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1] < order[i]);
}

TEST_CASE("stored cost and its peak track buffer contents") {
  auto f = make_modular({4.0, 4.0, 4.0});
  InstrumentedOracle wrapped(*f);
  CostedUniverse uni({0, 1, 2}, {2.0, 1.0, 0.5});
  StreamParams p(0.5, 2.0, 3.0);
  StreamState state(p, wrapped);
  stream_offer(state, p, wrapped, uni, 0);
  CHECK(state.stored_cost() == 2.0);
  CHECK(state.peak_stored_cost() == 2.0);
  stream_offer(state, p, wrapped, uni, 1);
  CHECK(state.stored_cost() == 3.0);
  CHECK(state.peak_stored_cost() == 3.0);
  CHECK(state.buffers().max_buffer_cost() == 3.0);
  CHECK(state.buffers().total_cost() == 3.0);
}

TEST_CASE("the two admission comparison forms agree away from rounding") {
  auto f = fixture_oracle();
  BufferSet ratio(2, 0.0), mult(2, 0.0);
  auto r1 = ratio.offer(*f, 0, 2.0, 0.75, true);   // 3/2 = 1.5 >= 0.75
  auto r2 = mult.offer(*f, 0, 2.0, 0.75, false);   // 3 >= 1.5
  CHECK(r1.admitted.has_value());
  CHECK(r2.admitted.has_value());
  CHECK(r1.scanned == 1);

  BufferSet deny(2, 0.0);
  auto r3 = deny.offer(*f, 2, 1.0, 1.25, true);  // 1 < 1.25 in both buffers
  CHECK_FALSE(r3.admitted.has_value());
  CHECK(r3.scanned == 2);
}

}  // TEST_SUITE
