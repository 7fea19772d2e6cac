#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subcover/core.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

// Result of an unconstrained submodular maximization subroutine. value is
// always an exact oracle evaluation of set (never an accumulated float).
struct UsmResult {
  std::vector<ElementId> set;
  double value = 0.0;
};

enum class UsmKind {
  kDoubleGreedyDet,   // deterministic double greedy, ratio 1/3
  kDoubleGreedyRand,  // randomized double greedy, best of R runs, ratio 1/2
  kRandomSet,         // best of R uniform subsets, ratio 1/4
  kLocalSearch,       // add/remove local search, ratio 1/3
  kExactBruteForce    // full enumeration, |S| <= 20, ratio 1
};

// Configured subroutine; carries its approximation ratio gamma and a query
// model T(m) used by the bound reporter.
struct UsmAlgorithm {
  UsmKind kind = UsmKind::kDoubleGreedyRand;
  int repetitions = 50;        // randomized kinds
  std::uint64_t seed = 0;      // randomized kinds
  double eps_ls = 0.25;        // local search slack

  double gamma() const;
  std::string name() const;
  bool randomized() const;
  // Upper bound on oracle queries for one run() over m elements.
  double query_bound(double m) const;

  UsmResult run(const SubmodularOracle& f, ElementSpan elements) const;
};

// Parse "dg" | "dg-det" | "rs" | "ls" | "exact" (throws std::invalid_argument).
UsmAlgorithm parse_usm(const std::string& name, int repetitions, std::uint64_t seed);

// Double greedy over the provided element order. Deterministic variant admits
// on strictly larger add-side gain (ties reject); randomized admits with
// probability a+/(a+ + b+), admitting on a double zero. Exactly 2|S|+2 queries
// (1 query when S is empty).
UsmResult double_greedy(const SubmodularOracle& f, ElementSpan elements, bool randomized, Rng& rng);

// Best of `reps` uniform random subsets; exactly max(reps,1) queries. The
// sample stream is nested in reps for a fixed rng state.
UsmResult random_set(const SubmodularOracle& f, ElementSpan elements, int reps, Rng& rng);

// Add/remove local search from the best singleton to a (1 + eps_ls/|S|^2)-
// approximate local optimum; returns the better of the local optimum and its
// complement within S.
UsmResult local_search(const SubmodularOracle& f, ElementSpan elements, double eps_ls);

// Exhaustive maximum over all subsets of S (|S| <= 20; exactly 2^|S| queries).
// Ties resolve to the lexicographically smallest sorted-id sequence.
UsmResult exact_usm(const SubmodularOracle& f, ElementSpan elements);

}  // namespace subcover
