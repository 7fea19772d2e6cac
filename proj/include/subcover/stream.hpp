#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subcover/core.hpp"
#include "subcover/oracle.hpp"
#include "subcover/solution.hpp"
#include "subcover/universe.hpp"
#include "subcover/usm.hpp"

namespace subcover {

// Parameters of one buffered threshold-filter pass.
struct StreamParams {
  double epsilon;    // in (0, 1)
  double tau;        // coverage target, > 0
  double opt_guess;  // guessed optimal cost, > 0

  StreamParams(double epsilon, double tau, double opt_guess);

  std::size_t bucket_count() const;          // ⌈2/ε⌉
  double density_threshold() const;          // ε·τ / (2·opt_guess)
  double buffer_capacity() const;            // 2·opt_guess / ε
};

// Disjoint admission buffers with cached f values. Each buffer stores the
// exact oracle value of its current contents, so a scan step costs one fresh
// query per buffer inspected.
class BufferSet {
 public:
  BufferSet() = default;
  BufferSet(std::size_t buckets, double f_empty);

  struct ScanResult {
    std::optional<std::size_t> admitted;  // buffer index
    std::size_t scanned = 0;              // marginal gains computed
  };

  // First-fit admission: admit u to the first buffer whose marginal gain
  // clears the bar. ratio_compare picks between Δf/w ≥ θ and Δf ≥ w·θ (the
  // two pseudocode forms; they differ only in rounding).
  ScanResult offer(const SubmodularOracle& f, ElementId u, double w_u, double threshold,
                   bool ratio_compare);

  std::size_t bucket_count() const { return buffers_.size(); }
  const std::vector<ElementId>& buffer(std::size_t j) const { return buffers_[j].elems; }
  double buffer_value(std::size_t j) const { return buffers_[j].value; }
  double buffer_cost(std::size_t j) const { return buffers_[j].cost; }
  double max_buffer_cost() const { return max_buffer_cost_; }
  double total_cost() const { return total_cost_; }
  // All admitted elements in arrival order (buffers are disjoint).
  const std::vector<ElementId>& admitted_order() const { return admitted_; }

 private:
  struct Buffer {
    std::vector<ElementId> elems;
    double value = 0.0;  // exact f(elems), assigned from the admitting query
    double cost = 0.0;
  };
  std::vector<Buffer> buffers_;
  std::vector<ElementId> admitted_;
  std::vector<ElementId> scratch_;
  double total_cost_ = 0.0;
  double max_buffer_cost_ = 0.0;
};

// State of a single streaming pass.
class StreamState {
 public:
  StreamState(const StreamParams& params, const InstrumentedOracle& f);

  bool closed() const { return closed_; }
  std::uint64_t consumed() const { return consumed_; }
  const BufferSet& buffers() const { return buffers_; }
  double stored_cost() const { return buffers_.total_cost(); }
  double peak_stored_cost() const { return peak_stored_; }
  std::uint64_t marginal_gains() const { return marginal_gains_; }

 private:
  friend struct StreamOps;
  BufferSet buffers_;
  bool closed_ = false;
  std::uint64_t consumed_ = 0;
  std::uint64_t marginal_gains_ = 0;
  double peak_stored_ = 0.0;
};

enum class OfferStatus {
  kDiscardedCostGate,  // w(u) > opt_guess; zero oracle queries
  kDiscardedBelowBar,  // scanned every buffer, no marginal cleared the bar
  kAdmitted,
  kAdmittedStreamClosed  // admission pushed the buffer past capacity
};

struct OfferResult {
  OfferStatus status;
  std::size_t buffer_index = static_cast<std::size_t>(-1);
};

// Feed one element. Throws std::logic_error if the stream already closed.
OfferResult stream_offer(StreamState& state, const StreamParams& params,
                         const InstrumentedOracle& f, const CostedUniverse& costs, ElementId u);

// Run the maximization subroutine over the union of the buffers and return the
// best of the subroutine output and the individual buffers (ties toward the
// lowest index, subroutine output first). Feasibility bar: γ(1-ε)τ.
BicriteriaSolution stream_finalize(StreamState& state, const StreamParams& params,
                                   const InstrumentedOracle& f, const CostedUniverse& costs,
                                   const UsmAlgorithm& usm);

}  // namespace subcover
