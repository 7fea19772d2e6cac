#include "subcover/kcsm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "subcover/stream.hpp"

namespace subcover {
namespace {

struct ValueGuess {
  BufferSet buffers;
  bool frozen = false;

  ValueGuess(std::size_t buckets, double f_empty) : buffers(buckets, f_empty) {}
};

}  // namespace

BicriteriaSolution single_max(const KcsmInstance& inst, double epsilon, const UsmAlgorithm& usm,
                              const SingleMaxOptions& opts) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(inst.kappa > 0.0) || !std::isfinite(inst.kappa))
    throw std::invalid_argument("budget must be positive");
  if (inst.universe.size() != inst.oracle.ground_size())
    throw std::invalid_argument("universe and oracle disagree on the ground size");

  const CostedUniverse& uni = inst.universe;
  const double kappa = inst.kappa;
  InstrumentedOracle f(inst.oracle);
  const double ratio = 1.0 + epsilon;
  const double cap = 2.0 * kappa / epsilon;
  const std::size_t buckets = static_cast<std::size_t>(std::ceil(2.0 / epsilon));

  const double f_empty = f.value({});

  std::map<int, ValueGuess> guesses;  // exponent of the value guess, ascending
  double best_density = 0.0;          // max f({x})/w(x) over everything consumed
  RunMetrics m;
  m.stream_passes = 1;
  double stored = 0.0;

  for (ElementId u : uni.order()) {
    const std::uint64_t q0 = f.queries();
    double elem_peak = stored;
    const double w = uni.cost(u);

    std::vector<ElementId> one{u};
    double sing = f.value(one);
    if (sing / w > best_density) {
      best_density = sing / w;
      // Window climbs with the density record: value guesses below the best
      // singleton are dominated, guesses above 2*d*kappa/eps are out of
      // reach. Low guesses drop with their buffers; new high guesses start
      // empty mid-stream.
      int lo = exp_ceil(ratio, best_density);
      int hi = exp_floor(ratio, 2.0 * best_density * kappa / epsilon);
      auto keep_from = guesses.lower_bound(lo);
      for (auto it = guesses.begin(); it != keep_from; ++it)
        stored -= it->second.buffers.total_cost();
      guesses.erase(guesses.begin(), keep_from);
      for (int i = lo; i <= hi; ++i)
        guesses.try_emplace(i, buckets, f_empty);
    }

    for (auto& [i, g] : guesses) {
      double tau_g = std::pow(ratio, i);
      if (!g.frozen) {
        for (std::size_t j = 0; j < g.buffers.bucket_count(); ++j) {
          if (!(g.buffers.buffer_cost(j) < cap)) {
            g.frozen = true;
            if (opts.trace)
              opts.trace->push_back(
                  TraceEvent{TraceEvent::Kind::kFrozen, u, static_cast<int>(j), tau_g, 0});
            break;
          }
        }
      }
      if (g.frozen) continue;
      if (w > kappa) {
        if (opts.trace)
          opts.trace->push_back(TraceEvent{TraceEvent::Kind::kCostGate, u, -1, tau_g, 0});
        continue;
      }
      BufferSet::ScanResult scan =
          g.buffers.offer(f, u, w, epsilon * tau_g / (2.0 * kappa), /*ratio_compare=*/false);
      m.marginal_gains += scan.scanned;
      if (scan.admitted) {
        stored += w;
        elem_peak = std::max(elem_peak, stored);
        m.peak_stored_cost = std::max(m.peak_stored_cost, stored);
        if (opts.trace)
          opts.trace->push_back(TraceEvent{TraceEvent::Kind::kAdmit, u,
                                           static_cast<int>(*scan.admitted), tau_g, 0});
      } else if (opts.trace) {
        opts.trace->push_back(TraceEvent{TraceEvent::Kind::kReject, u, -1, tau_g, 0});
      }
    }

    if (opts.record_trace) {
      m.per_element_queries.push_back(f.queries() - q0);
      m.stored_cost_trace.push_back(elem_peak);
      if (guesses.empty())
        m.window_trace.emplace_back(0, -1);
      else
        m.window_trace.emplace_back(guesses.begin()->first, guesses.rbegin()->first);
    }
    m.elements_consumed += 1;
  }

  BicriteriaSolution out;
  out.feasible = true;  // the driver's guarantee is bicriteria: cost may
                        // overshoot the budget by the stored-cost factor
  m.final_lower_bound = best_density;
  m.final_upper_bound = best_density > 0.0 ? 2.0 * best_density * kappa / epsilon : 0.0;

  bool have = false;
  for (auto& [i, g] : guesses) {
    double tau_g = std::pow(ratio, i);
    UsmResult s0 = usm.run(f, g.buffers.admitted_order());
    m.usm_runs += 1;
    if (!have || s0.value > out.value) {
      out.set = std::move(s0.set);
      out.value = s0.value;
      out.cost = uni.total_cost_of(out.set);
      out.certified_guess = tau_g;
      have = true;
    }
    for (std::size_t j = 0; j < g.buffers.bucket_count(); ++j) {
      if (g.buffers.buffer_value(j) > out.value) {
        out.set = g.buffers.buffer(j);
        out.value = g.buffers.buffer_value(j);
        out.cost = g.buffers.buffer_cost(j);
        out.certified_guess = tau_g;
      }
    }
  }
  if (!have) out.value = f_empty;

  m.queries = f.queries();
  m.queries_uncached = m.queries + m.marginal_gains;
  out.metrics = std::move(m);
  return out;
}

}  // namespace subcover
