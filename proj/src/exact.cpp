#include "subcover/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcover {
namespace {

void check_ground(std::size_t n) {
  if (n > kExactLimit)
    throw std::invalid_argument("exhaustive reference refused above 20 elements");
}

}  // namespace

ExactAnswer exact_sc_opt(const CoverInstance& inst) {
  const std::size_t n = inst.universe.size();
  check_ground(n);
  if (inst.oracle.ground_size() != n)
    throw std::invalid_argument("universe and oracle disagree on the ground size");

  ExactAnswer best;          // min-cost feasible subset
  ExactAnswer best_value;    // fallback when nothing reaches tau
  bool have_value = false;

  std::vector<ElementId> cur;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    cur.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) cur.push_back(static_cast<ElementId>(i));
    double v = inst.oracle.value(cur);
    double c = inst.universe.total_cost_of(cur);
    if (v >= inst.tau && (!best.feasible || c < best.cost)) {
      best.set = cur;
      best.value = v;
      best.cost = c;
      best.feasible = true;
    }
    if (!have_value || v > best_value.value) {
      best_value.set = cur;
      best_value.value = v;
      best_value.cost = c;
      have_value = true;
    }
  }
  ExactAnswer& out = best.feasible ? best : best_value;
  out.feasible = best.feasible;
  out.enumerated = limit;
  return out;
}

ExactAnswer exact_kcsm_opt(const KcsmInstance& inst) {
  const std::size_t n = inst.universe.size();
  check_ground(n);
  if (inst.oracle.ground_size() != n)
    throw std::invalid_argument("universe and oracle disagree on the ground size");

  ExactAnswer best;
  bool have = false;
  std::vector<ElementId> cur;
  const std::uint64_t limit = 1ull << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    cur.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) cur.push_back(static_cast<ElementId>(i));
    double c = inst.universe.total_cost_of(cur);
    if (c > inst.kappa) continue;
    double v = inst.oracle.value(cur);
    if (!have || v > best.value) {
      best.set = cur;
      best.value = v;
      best.cost = c;
      have = true;
    }
  }
  best.feasible = true;
  best.enumerated = limit;
  return best;
}

bool check_partition_averaging(const SubmodularOracle& f, const std::vector<std::vector<ElementId>>& blocks,
                  ElementSpan b_set, double tol) {
  if (blocks.empty()) throw std::invalid_argument("need at least one block");
  std::vector<char> seen(f.ground_size(), 0);
  for (const auto& block : blocks) {
    for (ElementId u : block) {
      if (u >= seen.size()) throw std::out_of_range("block element outside the ground set");
      if (seen[u]) throw std::invalid_argument("blocks must be pairwise disjoint");
      seen[u] = 1;
    }
  }

  double fb = f.value(b_set);
  double best = -kInf;
  std::vector<ElementId> uni;
  for (const auto& block : blocks) {
    uni.assign(b_set.begin(), b_set.end());
    for (ElementId u : block)
      if (std::find(b_set.begin(), b_set.end(), u) == b_set.end()) uni.push_back(u);
    best = std::max(best, f.value(uni));
  }
  double m = static_cast<double>(blocks.size());
  return best >= (1.0 - 1.0 / m) * fb - tol;
}

}  // namespace subcover
