#pragma once
#include "indcalc/finset.hpp"
#include "indcalc/nat.hpp"

#include <cstdint>
#include <vector>

namespace indcalc {

// finite table f : [0..length) -> N; reads past the end give 0
class FinFun {
 public:
  FinFun() = default;
  explicit FinFun(std::vector<std::uint64_t> values) : v_(std::move(values)) {}
  FinFun(std::initializer_list<std::uint64_t> values) : v_(values) {}
  static FinFun characteristic(const FinSet& s);

  std::size_t length() const { return v_.size(); }
  std::uint64_t at(std::size_t a) const { return a < v_.size() ? v_[a] : 0; }
  std::uint64_t at(const Nat& a) const;
  const std::vector<std::uint64_t>& values() const { return v_; }

  FinFun prefix(std::size_t k) const;
  // a^f
  FinFun cons(std::uint64_t a) const;
  // {k < n : f(k) > 0}
  FinSet support_set(std::size_t n) const;

  auto operator<=>(const FinFun&) const = default;

 private:
  std::vector<std::uint64_t> v_;
};

// sequence code of the values, the prefix code f-bar(m) when applied to a prefix
Nat code_of(const FinFun& f);

}  // namespace indcalc
