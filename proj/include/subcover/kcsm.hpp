#pragma once

#include "subcover/core.hpp"
#include "subcover/oracle.hpp"
#include "subcover/solution.hpp"
#include "subcover/universe.hpp"
#include "subcover/usm.hpp"

namespace subcover {

// Knapsack-constrained submodular maximization: maximize f(X) subject to
// cost(X) <= kappa. The streaming driver may exceed kappa by the bicriteria
// cost factor; value competes with the budget-feasible optimum.
struct KcsmInstance {
  const CostedUniverse& universe;
  const SubmodularOracle& oracle;
  double kappa;
};

struct SingleMaxOptions {
  bool record_trace = true;
  TraceSink* trace = nullptr;
};

// One-pass driver: runs parallel cover instances for value guesses at integer
// powers of (1+eps) inside the window [d, 2*d*kappa/eps], where d is the
// running maximum singleton density f({x})/w(x) over consumed elements.
// Admission per live guess tau_g: every buffer strictly below 2*kappa/eps
// (one full buffer freezes that guess), w(x) <= kappa, and some buffer with
// marginal gain >= w(x)*eps*tau_g/(2*kappa). The maximization subroutine runs
// once per surviving guess at stream end; the global argmax wins (ties toward
// the smallest guess, then the lowest buffer index).
BicriteriaSolution single_max(const KcsmInstance& inst, double epsilon, const UsmAlgorithm& usm,
                              const SingleMaxOptions& opts = {});

}  // namespace subcover
