#pragma once

#include <cstddef>
#include <vector>

#include "subcover/core.hpp"

namespace subcover {

// Ground set with positive element costs and a fixed stream order.
class CostedUniverse {
 public:
  // order: permutation of 0..n-1 giving the stream arrival order.
  // costs: indexed by element id; every cost must be finite and > 0.
  CostedUniverse(std::vector<ElementId> order, std::vector<double> costs);

  // Uniform cost 1, identity stream order.
  static CostedUniverse uniform(std::size_t n);

  std::size_t size() const { return costs_.size(); }
  const std::vector<ElementId>& order() const { return order_; }
  double cost(ElementId u) const { return costs_[u]; }
  const std::vector<double>& costs() const { return costs_; }

  double min_cost() const { return min_cost_; }
  double max_cost() const { return max_cost_; }
  double total_cost() const { return total_cost_; }

  double total_cost_of(ElementSpan subset) const;

 private:
  std::vector<ElementId> order_;
  std::vector<double> costs_;
  double min_cost_ = 0, max_cost_ = 0, total_cost_ = 0;
};

}  // namespace subcover
