#include "subcover/universe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace subcover {

CostedUniverse::CostedUniverse(std::vector<ElementId> order, std::vector<double> costs)
    : order_(std::move(order)), costs_(std::move(costs)) {
  if (order_.size() != costs_.size())
    throw std::invalid_argument("stream order and cost vector sizes differ");
  std::vector<bool> seen(costs_.size(), false);
  for (ElementId u : order_) {
    if (u >= costs_.size() || seen[u])
      throw std::invalid_argument("stream order must be a permutation of the element ids");
    seen[u] = true;
  }
  min_cost_ = kInf;
  for (double w : costs_) {
    if (!std::isfinite(w) || w <= 0.0)
      throw std::invalid_argument("element costs must be finite and positive");
    min_cost_ = std::min(min_cost_, w);
    max_cost_ = std::max(max_cost_, w);
    total_cost_ += w;
  }
  if (costs_.empty()) min_cost_ = 0.0;
}

CostedUniverse CostedUniverse::uniform(std::size_t n) {
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0u);
  return CostedUniverse(std::move(order), std::vector<double>(n, 1.0));
}

double CostedUniverse::total_cost_of(ElementSpan subset) const {
  std::vector<ElementId> ids = sorted_ids(subset, costs_.size());
  double total = 0.0;
  for (ElementId u : ids) total += costs_[u];
  return total;
}

}  // namespace subcover
