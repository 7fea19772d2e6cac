#include "subcover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "subcover/stream.hpp"

namespace subcover {
namespace {

void validate_cover(const CoverInstance& inst, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(inst.tau >= 0.0) || !std::isfinite(inst.tau))
    throw std::invalid_argument("coverage target must be nonnegative");
  if (inst.universe.size() != inst.oracle.ground_size())
    throw std::invalid_argument("universe and oracle disagree on the ground size");
}

// tau = 0 is covered by the empty set at zero cost; no pass needed.
BicriteriaSolution trivial_cover(const SubmodularOracle& oracle) {
  BicriteriaSolution out;
  out.value = oracle.value({});
  out.feasible = true;
  out.metrics.queries = 1;
  out.metrics.queries_uncached = 1;
  return out;
}

void trace_offer(TraceSink* trace, const OfferResult& r, ElementId u, double guess, int pass) {
  if (!trace) return;
  TraceEvent ev;
  ev.element = u;
  ev.guess = guess;
  ev.pass = pass;
  switch (r.status) {
    case OfferStatus::kDiscardedCostGate: ev.kind = TraceEvent::Kind::kCostGate; break;
    case OfferStatus::kDiscardedBelowBar: ev.kind = TraceEvent::Kind::kReject; break;
    case OfferStatus::kAdmitted:
      ev.kind = TraceEvent::Kind::kAdmit;
      ev.buffer = static_cast<int>(r.buffer_index);
      break;
    case OfferStatus::kAdmittedStreamClosed:
      ev.kind = TraceEvent::Kind::kStreamClosed;
      ev.buffer = static_cast<int>(r.buffer_index);
      break;
  }
  trace->push_back(ev);
}

}  // namespace

BicriteriaSolution multi(const CoverInstance& inst, double epsilon, const UsmAlgorithm& usm,
                         const MultiOptions& opts) {
  validate_cover(inst, epsilon);
  if (inst.tau == 0.0) return trivial_cover(inst.oracle);
  const CostedUniverse& uni = inst.universe;
  InstrumentedOracle f(inst.oracle);

  // Preliminary pass: the smallest element cost seeds the guess ladder. Costs
  // only, no oracle queries.
  double w_min = kInf;
  for (ElementId u : uni.order()) w_min = std::min(w_min, uni.cost(u));
  const double give_up = uni.total_cost() * (1.0 + epsilon);

  RunMetrics agg;
  agg.prelim_passes = 1;

  BicriteriaSolution best;
  bool have_best = false;

  for (int k = 0;; ++k) {
    double guess = w_min * std::pow(1.0 + epsilon, k);
    if (guess > give_up) break;

    StreamParams params(epsilon, inst.tau, guess);
    StreamState state(params, f);
    for (ElementId u : uni.order()) {
      if (state.closed()) break;
      OfferResult r = stream_offer(state, params, f, uni, u);
      trace_offer(opts.trace, r, u, guess, k);
    }
    BicriteriaSolution sol = stream_finalize(state, params, f, uni, usm);

    agg.stream_passes += 1;
    agg.usm_runs += 1;
    agg.marginal_gains += sol.metrics.marginal_gains;
    agg.elements_consumed += sol.metrics.elements_consumed;
    agg.peak_stored_cost = std::max(agg.peak_stored_cost, sol.metrics.peak_stored_cost);

    if (!have_best || sol.value > best.value) {
      best = sol;
      have_best = true;
    }
    if (sol.feasible) {
      best = sol;
      if (opts.trace)
        opts.trace->push_back(TraceEvent{TraceEvent::Kind::kCertified, 0, -1, guess, k});
      break;
    }
  }

  if (!have_best) {
    // Empty universe: nothing to stream over.
    best.value = f.value({});
    best.value_bound = usm.gamma() * (1.0 - epsilon) * inst.tau;
    best.feasible = best.value >= best.value_bound;
  }

  agg.queries = f.queries();
  agg.queries_uncached = agg.queries + agg.marginal_gains;
  best.metrics = agg;
  return best;
}

namespace {

// One live opt-cost guess inside the single-pass driver.
struct GuessInstance {
  BufferSet buffers;
  bool frozen = false;  // some buffer reached capacity: admissions stop
  bool dirty = true;    // buffers changed since the last subroutine run
  UsmResult s0;

  GuessInstance(std::size_t buckets, double f_empty) : buffers(buckets, f_empty) {
    s0.value = f_empty;
  }
};

struct GuessBest {
  double value;
  const std::vector<ElementId>* set;  // nullptr means the subroutine output
  std::size_t buffer = SIZE_MAX;
};

GuessBest best_of_guess(const GuessInstance& g) {
  GuessBest b{g.s0.value, nullptr, SIZE_MAX};
  for (std::size_t j = 0; j < g.buffers.bucket_count(); ++j) {
    if (g.buffers.buffer_value(j) > b.value) {
      b.value = g.buffers.buffer_value(j);
      b.set = &g.buffers.buffer(j);
      b.buffer = j;
    }
  }
  return b;
}

}  // namespace

BicriteriaSolution single(const CoverInstance& inst, double epsilon, double upper_bound,
                          const UsmAlgorithm& usm, const SingleOptions& opts) {
  validate_cover(inst, epsilon);
  if (!(upper_bound > 0.0) || !std::isfinite(upper_bound))
    throw std::invalid_argument("opt-cost upper bound must be positive and finite");
  if (inst.universe.size() > 0 && upper_bound < inst.universe.min_cost())
    throw std::invalid_argument("opt-cost upper bound below the minimum element cost");
  if (inst.tau == 0.0) return trivial_cover(inst.oracle);

  const CostedUniverse& uni = inst.universe;
  InstrumentedOracle f(inst.oracle);
  const double ratio = 1.0 + epsilon;
  const double bar = usm.gamma() * (1.0 - epsilon) * inst.tau;
  const std::size_t buckets = StreamParams(epsilon, inst.tau, 1.0).bucket_count();

  const double f_empty = f.value({});

  std::map<int, GuessInstance> guesses;  // exponent -> instance, ascending
  double lower = 0.0;                    // 0 until the first positive singleton
  double upper = upper_bound;
  const int top_exp = exp_ceil(ratio, upper_bound);
  bool any_certified = false;
  int hi_exp = top_exp;

  RunMetrics m;
  m.stream_passes = 1;
  double stored = 0.0;

  auto spawn_window = [&]() {
    if (lower <= 0.0) return;
    int lo = exp_ceil(ratio, lower);
    for (int i = lo; i <= hi_exp; ++i)
      guesses.try_emplace(i, buckets, f_empty);
  };

  for (ElementId u : uni.order()) {
    const std::uint64_t q0 = f.queries();
    double elem_peak = stored;
    const double w = uni.cost(u);

    std::vector<ElementId> one{u};
    double sing = f.value(one);
    if (sing > 0.0) {
      // Tighten the density bound: the bar a singleton must clear is
      // eps*tau/(2*lower); a denser element pulls lower down so that its own
      // density sits exactly on the bar.
      double density = sing / w;
      if (lower <= 0.0 || density > epsilon * inst.tau / (2.0 * lower)) {
        lower = epsilon * inst.tau * w / (2.0 * sing);
        spawn_window();
      }
    }

    for (auto& [i, g] : guesses) {
      double sigma = std::pow(ratio, i);
      double cap = 2.0 * sigma / epsilon;
      if (!g.frozen) {
        for (std::size_t j = 0; j < g.buffers.bucket_count(); ++j) {
          if (!(g.buffers.buffer_cost(j) < cap)) {
            g.frozen = true;
            if (opts.trace)
              opts.trace->push_back(
                  TraceEvent{TraceEvent::Kind::kFrozen, u, static_cast<int>(j), sigma, 0});
            break;
          }
        }
      }
      if (g.frozen) continue;
      if (w > sigma) {
        if (opts.trace)
          opts.trace->push_back(TraceEvent{TraceEvent::Kind::kCostGate, u, -1, sigma, 0});
        continue;
      }
      BufferSet::ScanResult scan =
          g.buffers.offer(f, u, w, epsilon * inst.tau / (2.0 * sigma), /*ratio_compare=*/false);
      m.marginal_gains += scan.scanned;
      if (scan.admitted) {
        g.dirty = true;
        stored += w;
        elem_peak = std::max(elem_peak, stored);
        m.peak_stored_cost = std::max(m.peak_stored_cost, stored);
        if (opts.trace)
          opts.trace->push_back(TraceEvent{TraceEvent::Kind::kAdmit, u,
                                           static_cast<int>(*scan.admitted), sigma, 0});
      } else if (opts.trace) {
        opts.trace->push_back(TraceEvent{TraceEvent::Kind::kReject, u, -1, sigma, 0});
      }
    }

    // Certification sweep, cheapest guess first. A guess whose buffers did
    // not change cannot newly certify (deterministic subroutines); the
    // literal every-element schedule reruns regardless.
    for (auto it = guesses.begin(); it != guesses.end(); ++it) {
      GuessInstance& g = it->second;
      if (opts.lazy_usm && !g.dirty) continue;
      g.s0 = usm.run(f, g.buffers.admitted_order());
      g.dirty = false;
      m.usm_runs += 1;
      GuessBest gb = best_of_guess(g);
      if (gb.value >= bar) {
        int i = it->first;
        double sigma = std::pow(ratio, i);
        if (!any_certified || i < hi_exp) {
          any_certified = true;
          hi_exp = i;
          upper = sigma;
          for (auto drop = std::next(it); drop != guesses.end(); ++drop)
            stored -= drop->second.buffers.total_cost();
          guesses.erase(std::next(it), guesses.end());
          if (opts.trace)
            opts.trace->push_back(TraceEvent{TraceEvent::Kind::kCertified, u, -1, sigma, 0});
        }
        break;
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
  out.value_bound = bar;
  m.final_lower_bound = lower;
  m.final_upper_bound = upper;

  if (guesses.empty()) {
    out.value = f_empty;
    out.feasible = out.value >= bar;
  } else {
    GuessInstance& g = guesses.rbegin()->second;
    if (g.dirty) {
      g.s0 = usm.run(f, g.buffers.admitted_order());
      g.dirty = false;
      m.usm_runs += 1;
    }
    GuessBest gb = best_of_guess(g);
    if (gb.set) {
      out.set = *gb.set;
      out.cost = g.buffers.buffer_cost(gb.buffer);
    } else {
      out.set = g.s0.set;
      out.cost = uni.total_cost_of(out.set);
    }
    out.value = gb.value;
    out.feasible = gb.value >= bar;
    out.certified_guess = any_certified ? std::pow(ratio, hi_exp) : 0.0;
  }

  m.queries = f.queries();
  m.queries_uncached = m.queries + m.marginal_gains;
  out.metrics = std::move(m);
  return out;
}

}  // namespace subcover
