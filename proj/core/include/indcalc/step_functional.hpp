#pragma once
#include "indcalc/finset.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace indcalc {

// F : FinSet -> FinSet | UNDEFINED over a fixed base
class StepFunctional {
 public:
  using Fn = std::function<std::optional<FinSet>(const FinSet&)>;

  StepFunctional() = default;
  // one entry per input mask, nullopt = UNDEFINED
  StepFunctional(std::size_t n, std::vector<std::optional<std::uint64_t>> table);
  StepFunctional(std::size_t n, Fn fn);

  static StepFunctional identity(std::size_t n);
  static StepFunctional constant(std::size_t n, FinSet value);

  std::size_t base_size() const { return n_; }
  std::optional<FinSet> apply(const FinSet& a) const;
  std::optional<FinSet> operator()(const FinSet& a) const { return apply(a); }

  bool table_backed() const { return !fn_; }
  const std::vector<std::optional<std::uint64_t>>& table() const { return table_; }
  // materialized table, defined for every backing when n is small
  std::vector<std::optional<std::uint64_t>> tabulate() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<std::uint64_t>> table_;
  Fn fn_;
};

// G : FinSet -> N, the single-valued case
class PointFunctional {
 public:
  using Fn = std::function<std::size_t(const FinSet&)>;
  PointFunctional() = default;
  PointFunctional(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}
  PointFunctional(std::size_t n, std::vector<std::size_t> table);

  std::size_t base_size() const { return n_; }
  std::size_t apply(const FinSet& a) const;
  std::size_t operator()(const FinSet& a) const { return apply(a); }

 private:
  std::size_t n_ = 0;
  Fn fn_;
};

}  // namespace indcalc
