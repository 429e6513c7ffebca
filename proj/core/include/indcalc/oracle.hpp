#pragma once
#include "indcalc/finfun.hpp"
#include "indcalc/nat.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace indcalc {

// F : N^support -> N | UNDEFINED, reading only g(0..support-1)
class Type2Oracle {
 public:
  using Fn = std::function<std::optional<Nat>(const FinFun&)>;

  Type2Oracle() = default;
  // range^support entries in base-range order with g(0) the most significant digit;
  // arguments with a value >= range are UNDEFINED
  Type2Oracle(std::size_t support, std::size_t range, std::vector<std::optional<Nat>> table);
  Type2Oracle(std::size_t support, Fn fn, std::string name = "closure");

  std::size_t support() const { return support_; }
  std::size_t range() const { return range_; }
  bool table_backed() const { return !fn_; }
  const std::vector<std::optional<Nat>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  std::uint64_t id() const { return id_; }

  std::optional<Nat> apply(const FinFun& g) const;

  // every {0..range-1}-valued oracle of the given support with values < values
  static std::vector<Type2Oracle> all_tables(std::size_t support, std::size_t range, std::size_t values);

 private:
  std::size_t support_ = 0;
  std::size_t range_ = 0;
  std::vector<std::optional<Nat>> table_;
  Fn fn_;
  std::string name_;
  std::uint64_t id_ = 0;
};

}  // namespace indcalc
