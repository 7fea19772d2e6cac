#include "subcover/usm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcover {
namespace {

UsmResult empty_input_result(const SubmodularOracle& f) {
  return UsmResult{{}, f.value({})};
}

}  // namespace

double UsmAlgorithm::gamma() const {
  switch (kind) {
    case UsmKind::kDoubleGreedyDet: return 1.0 / 3.0;
    case UsmKind::kDoubleGreedyRand: return 0.5;
    case UsmKind::kRandomSet: return 0.25;
    case UsmKind::kLocalSearch: return 1.0 / 3.0;
    case UsmKind::kExactBruteForce: return 1.0;
  }
  return 0.0;
}

std::string UsmAlgorithm::name() const {
  switch (kind) {
    case UsmKind::kDoubleGreedyDet: return "dg-det";
    case UsmKind::kDoubleGreedyRand: return "dg";
    case UsmKind::kRandomSet: return "rs";
    case UsmKind::kLocalSearch: return "ls";
    case UsmKind::kExactBruteForce: return "exact";
  }
  return "?";
}

bool UsmAlgorithm::randomized() const {
  return kind == UsmKind::kDoubleGreedyRand || kind == UsmKind::kRandomSet;
}

double UsmAlgorithm::query_bound(double m) const {
  if (m < 0) m = 0;
  double r = static_cast<double>(std::max(repetitions, 1));
  switch (kind) {
    case UsmKind::kDoubleGreedyDet: return 2.0 * m + 2.0;
    case UsmKind::kDoubleGreedyRand: return r * (2.0 * m + 2.0);
    case UsmKind::kRandomSet: return r;
    case UsmKind::kLocalSearch:
      return 4.0 * m * m * m * std::log(m + 1.0) / eps_ls + 8.0 * m + 4.0;
    case UsmKind::kExactBruteForce: return std::pow(2.0, m);
  }
  return 0.0;
}

UsmResult UsmAlgorithm::run(const SubmodularOracle& f, ElementSpan elements) const {
  switch (kind) {
    case UsmKind::kDoubleGreedyDet: {
      Rng rng(seed);
      return double_greedy(f, elements, /*randomized=*/false, rng);
    }
    case UsmKind::kDoubleGreedyRand: {
      Rng rng(seed);
      UsmResult best;
      bool have = false;
      for (int r = 0; r < std::max(repetitions, 1); ++r) {
        UsmResult cur = double_greedy(f, elements, /*randomized=*/true, rng);
        if (!have || cur.value > best.value) {
          best = std::move(cur);
          have = true;
        }
      }
      return best;
    }
    case UsmKind::kRandomSet: {
      Rng rng(seed);
      return random_set(f, elements, repetitions, rng);
    }
    case UsmKind::kLocalSearch: return local_search(f, elements, eps_ls);
    case UsmKind::kExactBruteForce: return exact_usm(f, elements);
  }
  throw std::logic_error("unknown maximization subroutine");
}

UsmAlgorithm parse_usm(const std::string& name, int repetitions, std::uint64_t seed) {
  UsmAlgorithm a;
  a.repetitions = repetitions;
  a.seed = seed;
  if (name == "dg") a.kind = UsmKind::kDoubleGreedyRand;
  else if (name == "dg-det") a.kind = UsmKind::kDoubleGreedyDet;
  else if (name == "rs") a.kind = UsmKind::kRandomSet;
  else if (name == "ls") a.kind = UsmKind::kLocalSearch;
  else if (name == "exact") a.kind = UsmKind::kExactBruteForce;
  else throw std::invalid_argument("unknown usm '" + name + "' (expected dg, dg-det, rs, ls, exact)");
  return a;
}

UsmResult double_greedy(const SubmodularOracle& f, ElementSpan elements, bool randomized,
                        Rng& rng) {
  if (elements.empty()) return empty_input_result(f);

  std::vector<ElementId> grow;
  grow.reserve(elements.size());
  std::vector<ElementId> shrink(elements.begin(), elements.end());
  std::vector<ElementId> scratch;
  scratch.reserve(elements.size());

  double f_grow = f.value({});
  double f_shrink = f.value(shrink);

  for (std::size_t i = 0; i < elements.size(); ++i) {
    ElementId u = elements[i];

    scratch.assign(grow.begin(), grow.end());
    scratch.push_back(u);
    double q_add = f.value(scratch);
    double gain_add = q_add - f_grow;

    scratch.clear();
    for (ElementId v : shrink)
      if (v != u) scratch.push_back(v);
    double q_rem = f.value(scratch);
    double gain_rem = q_rem - f_shrink;

    bool take;
    if (randomized) {
      double a = std::max(gain_add, 0.0);
      double b = std::max(gain_rem, 0.0);
      take = (a + b == 0.0) ? true : rng.next_double() < a / (a + b);
    } else {
      take = gain_add > gain_rem;  // tie rejects: keep the grow side smaller
    }

    if (take) {
      grow.push_back(u);
      f_grow = q_add;
    } else {
      shrink.erase(std::find(shrink.begin(), shrink.end(), u));
      f_shrink = q_rem;
    }
  }
  return UsmResult{std::move(grow), f_grow};
}

UsmResult random_set(const SubmodularOracle& f, ElementSpan elements, int reps, Rng& rng) {
  if (elements.empty()) return empty_input_result(f);
  reps = std::max(reps, 1);
  UsmResult best;
  bool have = false;
  std::vector<ElementId> sample;
  sample.reserve(elements.size());
  for (int r = 0; r < reps; ++r) {
    sample.clear();
    for (ElementId u : elements)
      if (rng.next_bool()) sample.push_back(u);
    double v = f.value(sample);
    if (!have || v > best.value) {
      best.set = sample;
      best.value = v;
      have = true;
    }
  }
  return best;
}

UsmResult local_search(const SubmodularOracle& f, ElementSpan elements, double eps_ls) {
  if (elements.empty()) return empty_input_result(f);
  if (eps_ls <= 0.0) throw std::invalid_argument("local search slack must be positive");
  const std::size_t m = elements.size();
  const double rel = eps_ls / (static_cast<double>(m) * static_cast<double>(m));

  // Seed with the best singleton (first maximum in input order).
  std::vector<ElementId> current;
  double f_cur = -kInf;
  std::vector<ElementId> scratch(1);
  for (ElementId u : elements) {
    scratch[0] = u;
    double v = f.value(scratch);
    if (v > f_cur) {
      f_cur = v;
      current.assign(1, u);
    }
  }

  std::vector<char> in_current(f.ground_size(), 0);
  for (ElementId u : current) in_current[u] = 1;

  bool improved = true;
  while (improved) {
    improved = false;
    for (ElementId u : elements) {  // add scan, first improvement
      if (in_current[u]) continue;
      scratch.assign(current.begin(), current.end());
      scratch.push_back(u);
      double v = f.value(scratch);
      if (v > (1.0 + rel) * f_cur) {
        current.push_back(u);
        in_current[u] = 1;
        f_cur = v;
        improved = true;
        break;
      }
    }
    if (improved) continue;
    for (ElementId u : elements) {  // remove scan
      if (!in_current[u]) continue;
      scratch.clear();
      for (ElementId v : current)
        if (v != u) scratch.push_back(v);
      double v = f.value(scratch);
      if (v > (1.0 + rel) * f_cur) {
        current.erase(std::find(current.begin(), current.end(), u));
        in_current[u] = 0;
        f_cur = v;
        improved = true;
        break;
      }
    }
  }

  scratch.clear();
  for (ElementId u : elements)
    if (!in_current[u]) scratch.push_back(u);
  double f_comp = f.value(scratch);
  if (f_comp > f_cur) return UsmResult{std::move(scratch), f_comp};
  return UsmResult{std::move(current), f_cur};
}

UsmResult exact_usm(const SubmodularOracle& f, ElementSpan elements) {
  if (elements.size() > 20)
    throw std::invalid_argument("exhaustive maximization refused above 20 elements");
  std::vector<ElementId> base(elements.begin(), elements.end());
  std::sort(base.begin(), base.end());

  std::vector<ElementId> cur, best_set;
  double best = -kInf;
  const std::uint32_t limit = 1u << base.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    cur.clear();
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask & (1u << i)) cur.push_back(base[i]);
    double v = f.value(cur);
    if (v > best || (v == best && lex_less(cur, best_set))) {
      best = v;
      best_set = cur;
    }
  }
  return UsmResult{std::move(best_set), best};
}

}  // namespace subcover
