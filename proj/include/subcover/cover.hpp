#pragma once

#include "subcover/core.hpp"
#include "subcover/oracle.hpp"
#include "subcover/solution.hpp"
#include "subcover/universe.hpp"
#include "subcover/usm.hpp"

namespace subcover {

// Submodular cover instance: minimize cost(X) subject to f(X) >= tau.
struct CoverInstance {
  const CostedUniverse& universe;
  const SubmodularOracle& oracle;
  double tau;
};

struct MultiOptions {
  TraceSink* trace = nullptr;
};

// Multi-pass driver: geometric ladder of opt-cost guesses starting at the
// minimum element cost (computed in a preliminary pass), one streaming pass
// per guess, stopping at the first guess whose pass certifies
// f >= gamma*(1-eps)*tau. Gives up once the guess exceeds (1+eps) * total
// cost and returns the best set seen, flagged infeasible.
BicriteriaSolution multi(const CoverInstance& inst, double epsilon, const UsmAlgorithm& usm,
                         const MultiOptions& opts = {});

struct SingleOptions {
  // Rerun the maximization subroutine only when a guess's buffers changed
  // (output-equivalent to the every-element rerun for deterministic
  // subroutines). Set false for the literal every-element schedule.
  bool lazy_usm = true;
  bool record_trace = true;  // per-element metrics vectors
  TraceSink* trace = nullptr;
};

// One-pass driver: maintains parallel guess instances at integer powers of
// (1+eps) inside a lazily tracked window [L, B]. L tightens downward as
// denser singletons arrive; B drops to the smallest guess whose instance
// certifies. Returns the best set held by the final upper-bound guess.
// upper_bound must be >= the minimum element cost.
BicriteriaSolution single(const CoverInstance& inst, double epsilon, double upper_bound,
                          const UsmAlgorithm& usm, const SingleOptions& opts = {});

}  // namespace subcover
