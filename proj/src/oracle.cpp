#include "subcover/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace subcover {

double marginal_gain(const SubmodularOracle& f, ElementSpan x_set, ElementId x) {
  std::vector<ElementId> with(x_set.begin(), x_set.end());
  if (std::find(with.begin(), with.end(), x) == with.end()) with.push_back(x);
  double f_with = f.value(with);
  double f_without = f.value(x_set);
  return f_with - f_without;
}

ModularOracle::ModularOracle(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("modular objective requires finite nonnegative element values");
  }
}

double ModularOracle::value(ElementSpan subset) const {
  // Sorted accumulation keeps evaluation a true set function under float
  // rounding.
  thread_local std::vector<ElementId> scratch;
  scratch.assign(subset.begin(), subset.end());
  std::sort(scratch.begin(), scratch.end());
  double total = 0.0;
  for (ElementId id : scratch) {
    if (id >= values_.size()) throw std::invalid_argument("unknown element id in modular evaluation");
    total += values_[id];
  }
  return total;
}

}  // namespace subcover
