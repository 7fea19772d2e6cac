#include "subcover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcover {
namespace {

double usm_union_bound(const InstanceStats& s, double stored_cost_cap) {
  if (s.w_min <= 0.0) return static_cast<double>(s.n);
  return std::min(static_cast<double>(s.n), stored_cost_cap / s.w_min);
}

}  // namespace

InstanceStats compute_instance_stats(const CostedUniverse& u, const SubmodularOracle& f) {
  InstanceStats s;
  s.n = u.size();
  s.w_min = u.size() ? u.min_cost() : 0.0;
  s.w_max = u.size() ? u.max_cost() : 0.0;
  s.total_cost = u.total_cost();
  ElementId one[1];
  for (ElementId x : u.order()) {
    one[0] = x;
    double v = f.value(ElementSpan(one, 1));
    if (v > 0.0) s.min_cost_value_ratio = std::min(s.min_cost_value_ratio, u.cost(x) / v);
  }
  return s;
}

double stored_cost_factor(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  double b = std::ceil(2.0 / epsilon);
  return b * (2.0 / epsilon) + 1.0;
}

BoundReport multi_bounds(const InstanceStats& s, double epsilon, double x,
                         const UsmAlgorithm& usm) {
  if (!(x > 0.0)) throw std::invalid_argument("opt-cost reference must be positive");
  BoundReport r;
  r.kind = "multi";
  r.stored_cost_factor = stored_cost_factor(epsilon);
  double b = std::ceil(2.0 / epsilon);
  double n = static_cast<double>(s.n);

  r.pass_bound_raw = s.w_min > 0.0 ? std::max(0.0, std::log(x / s.w_min) / std::log1p(epsilon))
                                   : 0.0;
  r.pass_bound = std::ceil(r.pass_bound_raw) + 1.0;
  r.cost_bound = (1.0 + epsilon) * r.stored_cost_factor * x;
  r.peak_stored_formula = (4.0 / (epsilon * epsilon) + 1.0) * (1.0 + epsilon) * x;
  r.peak_stored_bound = r.stored_cost_factor * (1.0 + epsilon) * x;

  // Per pass: one empty-set query at spawn, at most b scan queries per
  // element, one subroutine run over the buffer union.
  double m_union = usm_union_bound(s, r.stored_cost_factor * (1.0 + epsilon) * x);
  r.query_bound = r.pass_bound * (n * b + 2.0 + usm.query_bound(m_union));
  r.per_element_query_bound = b;
  r.guess_count_bound = r.pass_bound;
  return r;
}

BoundReport single_bounds(const InstanceStats& s, double epsilon, double tau, double x,
                          const UsmAlgorithm& usm) {
  if (!(x > 0.0)) throw std::invalid_argument("opt-cost reference must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("coverage target must be positive");
  BoundReport r;
  r.kind = "single";
  r.stored_cost_factor = stored_cost_factor(epsilon);
  double b = std::ceil(2.0 / epsilon);
  double n = static_cast<double>(s.n);

  r.pass_bound_raw = 0.0;
  r.pass_bound = 1.0;
  r.cost_bound = (1.0 + epsilon) * r.stored_cost_factor * x;

  // The guess window never reaches below eps*tau*xi/2 (xi: the smallest
  // cost-to-value ratio among positive singletons) nor above (1+eps)*x.
  double xi = s.min_cost_value_ratio;
  double window_log = 0.0;
  if (std::isfinite(xi) && xi > 0.0)
    window_log = std::max(0.0, std::log(2.0 * x / (epsilon * tau * xi)) / std::log1p(epsilon));
  r.guess_count_bound = window_log + 2.0;
  r.peak_stored_formula = r.stored_cost_factor * (1.0 + epsilon) * x * window_log;
  r.peak_stored_bound = r.stored_cost_factor * (1.0 + epsilon) * x * r.guess_count_bound;

  double m_union = usm_union_bound(s, r.stored_cost_factor * (1.0 + epsilon) * x);
  double g = r.guess_count_bound;
  double t_usm = usm.query_bound(m_union);
  // One empty-set query, one singleton query per element, b scans per live
  // guess per element, and a subroutine rerun for every buffer change (at
  // worst one per guess per element, plus one per spawn and a final refresh).
  r.query_bound = 1.0 + n + n * g * b + (n * g + g + 1.0) * t_usm;
  r.per_element_query_bound = 1.0 + g * (b + t_usm);
  return r;
}

BoundReport single_max_bounds(const InstanceStats& s, double epsilon, double kappa,
                              const UsmAlgorithm& usm) {
  if (!(kappa > 0.0)) throw std::invalid_argument("budget must be positive");
  BoundReport r;
  r.kind = "singlemax";
  r.stored_cost_factor = stored_cost_factor(epsilon);
  double b = std::ceil(2.0 / epsilon);
  double n = static_cast<double>(s.n);

  r.pass_bound_raw = 0.0;
  r.pass_bound = 1.0;
  r.cost_bound = r.stored_cost_factor * kappa;

  // Value-guess window spans a fixed multiplicative range 2*kappa/eps, so the
  // live-guess count is bounded independent of the data.
  double window_log = std::log(2.0 * kappa / epsilon) / std::log1p(epsilon);
  r.guess_count_bound = std::floor(std::max(0.0, window_log)) + 1.0;
  r.peak_stored_formula = r.stored_cost_factor * kappa * window_log;
  r.peak_stored_bound = r.stored_cost_factor * kappa * r.guess_count_bound;

  double m_union = usm_union_bound(s, r.stored_cost_factor * kappa);
  double g = r.guess_count_bound;
  r.query_bound = 1.0 + n + n * g * b + g * usm.query_bound(m_union);
  r.per_element_query_bound = 1.0 + g * b;
  return r;
}

BoundReport resource_bounds(const std::string& kind, const InstanceStats& s, double epsilon,
                           double tau, double x, double kappa, const UsmAlgorithm& usm) {
  if (kind == "multi") return multi_bounds(s, epsilon, x, usm);
  if (kind == "single") return single_bounds(s, epsilon, tau, x, usm);
  if (kind == "singlemax") return single_max_bounds(s, epsilon, kappa, usm);
  throw std::invalid_argument("unknown bound kind '" + kind + "'");
}

}  // namespace subcover
