#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "subcover/core.hpp"

namespace subcover {

// Value-oracle access to a nonnegative submodular set function f over ground
// set {0, ..., ground_size()-1}. Implementations must be deterministic and
// order-insensitive in the subset argument, immutable after construction, and
// safe to evaluate concurrently.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual double value(ElementSpan subset) const = 0;
};

// Counting wrapper. Every value() call increments the query counter by exactly
// one; values pass through bit-exactly. The counter tolerates concurrent
// increments.
class InstrumentedOracle final : public SubmodularOracle {
 public:
  explicit InstrumentedOracle(const SubmodularOracle& inner) : inner_(inner) {}

  std::size_t ground_size() const override { return inner_.ground_size(); }

  double value(ElementSpan subset) const override {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_.value(subset);
  }

  std::uint64_t queries() const { return count_.load(std::memory_order_relaxed); }
  void reset() { count_.store(0, std::memory_order_relaxed); }

 private:
  const SubmodularOracle& inner_;
  mutable std::atomic<std::uint64_t> count_{0};
};

// f(X ∪ {x}) - f(X), at a cost of exactly two oracle queries. If x ∈ X the
// result is exactly 0 (both queries evaluate the same set).
double marginal_gain(const SubmodularOracle& f, ElementSpan x_set, ElementId x);

// Modular objective f(X) = Σ_{x∈X} values[x]. All values must be finite and
// nonnegative (keeps f nonnegative and submodular).
class ModularOracle final : public SubmodularOracle {
 public:
  explicit ModularOracle(std::vector<double> values);
  std::size_t ground_size() const override { return values_.size(); }
  double value(ElementSpan subset) const override;
  const std::vector<double>& element_values() const { return values_; }

 private:
  std::vector<double> values_;
};

inline std::unique_ptr<ModularOracle> make_modular(std::vector<double> values) {
  return std::make_unique<ModularOracle>(std::move(values));
}

}  // namespace subcover
