#include "subcover/core.hpp"

#include <algorithm>
#include <cmath>

namespace subcover {

namespace {

void check_grid_args(double ratio, double x) {
  if (!(ratio > 1.0) || !std::isfinite(ratio))
    throw std::invalid_argument("grid ratio must exceed 1");
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument("grid point must be positive and finite");
}

}  // namespace

int exp_floor(double ratio, double x) {
  check_grid_args(ratio, x);
  int i = static_cast<int>(std::floor(std::log(x) / std::log(ratio) + 1e-9));
  while (std::pow(ratio, i + 1) <= x * (1.0 + 1e-12)) ++i;
  while (std::pow(ratio, i) > x * (1.0 + 1e-12)) --i;
  return i;
}

int exp_ceil(double ratio, double x) {
  check_grid_args(ratio, x);
  int i = static_cast<int>(std::ceil(std::log(x) / std::log(ratio) - 1e-9));
  while (std::pow(ratio, i - 1) >= x * (1.0 - 1e-12)) --i;
  while (std::pow(ratio, i) < x * (1.0 - 1e-12)) ++i;
  return i;
}

bool lex_less(ElementSpan a, ElementSpan b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<ElementId> sorted_ids(ElementSpan x, std::size_t ground_size) {
  std::vector<ElementId> out(x.begin(), x.end());
  std::sort(out.begin(), out.end());
  for (ElementId id : out) {
    if (id >= ground_size) throw std::invalid_argument("element id out of range: " + std::to_string(id));
  }
  return out;
}

}  // namespace subcover
