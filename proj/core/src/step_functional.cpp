#include "indcalc/step_functional.hpp"

#include <stdexcept>

namespace indcalc {

StepFunctional::StepFunctional(std::size_t n, std::vector<std::optional<std::uint64_t>> table)
    : n_(n), table_(std::move(table)) {
  if (n >= 24) throw std::invalid_argument("table-backed StepFunctional needs n < 24");
  if (table_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("StepFunctional table needs 2^n entries, got " + std::to_string(table_.size()));
  for (const auto& m : table_)
    if (m) FinSet(n, *m);
}

StepFunctional::StepFunctional(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {
  if (n > FinSet::max_base) throw std::invalid_argument("StepFunctional base above 64");
}

StepFunctional StepFunctional::identity(std::size_t n) {
  return StepFunctional(n, [](const FinSet& a) -> std::optional<FinSet> { return a; });
}

StepFunctional StepFunctional::constant(std::size_t n, FinSet value) {
  return StepFunctional(n, [value](const FinSet&) -> std::optional<FinSet> { return value; });
}

std::optional<FinSet> StepFunctional::apply(const FinSet& a) const {
  if (a.base_size() != n_) throw base_mismatch("StepFunctional applied to a set over a different base");
  if (fn_) {
    auto r = fn_(a);
    if (r && r->base_size() != n_) throw base_mismatch("StepFunctional produced a set over a different base");
    return r;
  }
  const auto& m = table_[a.mask()];
  if (!m) return std::nullopt;
  return FinSet(n_, *m);
}

std::vector<std::optional<std::uint64_t>> StepFunctional::tabulate() const {
  if (!fn_) return table_;
  if (n_ >= 24) throw std::invalid_argument("tabulate needs n < 24");
  std::vector<std::optional<std::uint64_t>> out(std::size_t{1} << n_);
  for (std::uint64_t m = 0; m < out.size(); ++m) {
    auto r = apply(FinSet(n_, m));
    if (r) out[m] = r->mask();
  }
  return out;
}

PointFunctional::PointFunctional(std::size_t n, std::vector<std::size_t> table) : n_(n) {
  if (table.size() != (std::size_t{1} << n)) throw std::invalid_argument("PointFunctional table needs 2^n entries");
  fn_ = [t = std::move(table)](const FinSet& a) { return t[a.mask()]; };
}

std::size_t PointFunctional::apply(const FinSet& a) const {
  if (a.base_size() != n_) throw base_mismatch("PointFunctional applied to a set over a different base");
  return fn_(a);
}

}  // namespace indcalc
