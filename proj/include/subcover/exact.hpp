#pragma once

#include <cstdint>
#include <vector>

#include "subcover/core.hpp"
#include "subcover/cover.hpp"
#include "subcover/kcsm.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

// Brute-force reference answers; refuse ground sets above this size.
inline constexpr std::size_t kExactLimit = 20;

struct ExactAnswer {
  std::vector<ElementId> set;
  double value = 0.0;
  double cost = 0.0;
  bool feasible = false;            // cover: some subset reaches tau
  std::uint64_t enumerated = 0;     // subsets evaluated
};

// Minimum-cost subset with f(X) >= tau (2^n evaluations, n <= 20). Ties
// toward the numerically smallest bitmask. feasible=false when no subset
// reaches tau; the returned set is then the best-value one.
ExactAnswer exact_sc_opt(const CoverInstance& inst);

// Maximum-value subset with cost(X) <= kappa. Same guard and tie rule.
ExactAnswer exact_kcsm_opt(const KcsmInstance& inst);

// Partition-averaging check: with A_1..A_m pairwise disjoint, verifies
// max_i f(A_i ∪ B) >= (1 - 1/m) f(B) - tol. Throws on overlapping blocks.
bool check_partition_averaging(const SubmodularOracle& f, const std::vector<std::vector<ElementId>>& blocks,
                  ElementSpan b_set, double tol = 1e-9);

}  // namespace subcover
