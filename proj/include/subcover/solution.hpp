#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subcover/core.hpp"

namespace subcover {

// Resource accounting for one algorithm run. queries is the instrumented
// oracle-call count with buffer-value caching in effect; queries_uncached adds
// one per marginal-gain computation (the cost had each Δf been evaluated as
// two fresh queries).
struct RunMetrics {
  std::uint64_t queries = 0;
  std::uint64_t queries_uncached = 0;
  std::uint64_t marginal_gains = 0;
  std::uint64_t usm_runs = 0;
  std::uint64_t stream_passes = 0;   // full reads of U that issue oracle queries
  std::uint64_t prelim_passes = 0;   // cost-only scans (no oracle queries)
  std::uint64_t elements_consumed = 0;
  double peak_stored_cost = 0.0;     // sampled after every buffer mutation
  double wall_ms = 0.0;

  // One-pass drivers: per arriving element, in stream order.
  std::vector<std::uint64_t> per_element_queries;
  std::vector<double> stored_cost_trace;             // peak during that element
  std::vector<std::pair<int, int>> window_trace;     // live guess exponents [lo, hi]

  // Final guess-window state (one-pass drivers; NaN/0 when not applicable).
  double final_lower_bound = 0.0;
  double final_upper_bound = 0.0;

  std::uint64_t total_passes() const { return stream_passes + prelim_passes; }
};

// Output of the cover / budgeted-max drivers.
struct BicriteriaSolution {
  std::vector<ElementId> set;
  double value = 0.0;        // exact oracle value of set
  double cost = 0.0;         // total cost of set
  bool feasible = false;     // value >= gamma*(1-eps)*tau (cover drivers)
  double value_bound = 0.0;  // the certification bar that applied
  double certified_guess = 0.0;  // guess that certified / produced the set (0 if none)
  RunMetrics metrics;
};

// Admission trace event, for golden tests and debugging.
struct TraceEvent {
  enum class Kind : char {
    kAdmit = 'a',        // admitted to buffer
    kReject = 'r',       // scanned every open buffer, below threshold
    kCostGate = 'g',     // cost gate: element too expensive for this guess
    kFrozen = 'z',       // guess frozen (a buffer at capacity), no admission
    kStreamClosed = 'c', // admission pushed a buffer past capacity, stream closed
    kCertified = 't'     // guess certified (cover drivers)
  };
  Kind kind;
  ElementId element = 0;
  int buffer = -1;         // admitted buffer index, -1 otherwise
  double guess = 0.0;      // opt-cost guess (cover) or value guess (budgeted max)
  int pass = 0;            // multi: ladder pass index; one-pass drivers: 0
};

using TraceSink = std::vector<TraceEvent>;

}  // namespace subcover
