#include "subcover/stream.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcover {

StreamParams::StreamParams(double epsilon_, double tau_, double opt_guess_)
    : epsilon(epsilon_), tau(tau_), opt_guess(opt_guess_) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be positive");
  if (!(opt_guess > 0.0) || !std::isfinite(opt_guess))
    throw std::invalid_argument("opt-cost guess must be positive");
}

std::size_t StreamParams::bucket_count() const {
  return static_cast<std::size_t>(std::ceil(2.0 / epsilon));
}

double StreamParams::density_threshold() const { return epsilon * tau / (2.0 * opt_guess); }

double StreamParams::buffer_capacity() const { return 2.0 * opt_guess / epsilon; }

BufferSet::BufferSet(std::size_t buckets, double f_empty) : buffers_(buckets) {
  for (Buffer& b : buffers_) b.value = f_empty;
}

BufferSet::ScanResult BufferSet::offer(const SubmodularOracle& f, ElementId u, double w_u,
                                       double threshold, bool ratio_compare) {
  ScanResult r;
  for (std::size_t j = 0; j < buffers_.size(); ++j) {
    Buffer& b = buffers_[j];
    scratch_.assign(b.elems.begin(), b.elems.end());
    scratch_.push_back(u);
    double q = f.value(scratch_);
    ++r.scanned;
    double gain = q - b.value;
    bool admit = ratio_compare ? (gain / w_u >= threshold) : (gain >= w_u * threshold);
    if (admit) {
      b.elems.push_back(u);
      b.value = q;
      b.cost += w_u;
      total_cost_ += w_u;
      max_buffer_cost_ = std::max(max_buffer_cost_, b.cost);
      admitted_.push_back(u);
      r.admitted = j;
      return r;
    }
  }
  return r;
}

StreamState::StreamState(const StreamParams& params, const InstrumentedOracle& f)
    : buffers_(params.bucket_count(), f.value({})) {}

struct StreamOps {
  static OfferResult offer(StreamState& state, const StreamParams& params,
                           const InstrumentedOracle& f, const CostedUniverse& costs, ElementId u) {
    if (state.closed_) throw std::logic_error("offer to a closed stream");
    ++state.consumed_;

    double w = costs.cost(u);
    if (w > params.opt_guess) return OfferResult{OfferStatus::kDiscardedCostGate, SIZE_MAX};

    BufferSet::ScanResult scan =
        state.buffers_.offer(f, u, w, params.density_threshold(), /*ratio_compare=*/true);
    state.marginal_gains_ += scan.scanned;
    if (!scan.admitted) return OfferResult{OfferStatus::kDiscardedBelowBar, SIZE_MAX};

    state.peak_stored_ = std::max(state.peak_stored_, state.buffers_.total_cost());
    std::size_t j = *scan.admitted;
    if (state.buffers_.buffer_cost(j) > params.buffer_capacity()) {
      state.closed_ = true;
      return OfferResult{OfferStatus::kAdmittedStreamClosed, j};
    }
    return OfferResult{OfferStatus::kAdmitted, j};
  }

  static BicriteriaSolution finalize(StreamState& state, const StreamParams& params,
                                     const InstrumentedOracle& f, const CostedUniverse& costs,
                                     const UsmAlgorithm& usm) {
    UsmResult s0 = usm.run(f, state.buffers_.admitted_order());

    BicriteriaSolution out;
    out.set = s0.set;
    out.value = s0.value;
    out.cost = costs.total_cost_of(out.set);
    for (std::size_t j = 0; j < state.buffers_.bucket_count(); ++j) {
      if (state.buffers_.buffer_value(j) > out.value) {
        out.set = state.buffers_.buffer(j);
        out.value = state.buffers_.buffer_value(j);
        out.cost = state.buffers_.buffer_cost(j);
      }
    }

    out.value_bound = usm.gamma() * (1.0 - params.epsilon) * params.tau;
    out.feasible = out.value >= out.value_bound;
    out.certified_guess = out.feasible ? params.opt_guess : 0.0;

    out.metrics.usm_runs = 1;
    out.metrics.stream_passes = 1;
    out.metrics.marginal_gains = state.marginal_gains_;
    out.metrics.elements_consumed = state.consumed_;
    out.metrics.peak_stored_cost = state.peak_stored_;
    return out;
  }
};

OfferResult stream_offer(StreamState& state, const StreamParams& params,
                         const InstrumentedOracle& f, const CostedUniverse& costs, ElementId u) {
  return StreamOps::offer(state, params, f, costs, u);
}

BicriteriaSolution stream_finalize(StreamState& state, const StreamParams& params,
                                   const InstrumentedOracle& f, const CostedUniverse& costs,
                                   const UsmAlgorithm& usm) {
  return StreamOps::finalize(state, params, f, costs, usm);
}

}  // namespace subcover
