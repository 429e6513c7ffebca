#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace indcalc {

struct base_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// subset of [0..n) for n <= 64
class FinSet {
 public:
  static constexpr std::size_t max_base = 64;

  FinSet() = default;
  explicit FinSet(std::size_t n, std::uint64_t mask = 0);
  static FinSet of(std::size_t n, std::initializer_list<std::size_t> xs);
  static FinSet full(std::size_t n);

  std::size_t base_size() const { return n_; }
  std::uint64_t mask() const { return mask_; }

  bool contains(std::size_t x) const { return x < n_ && ((mask_ >> x) & 1u); }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  std::vector<std::size_t> members() const;
  // least member, or base_size when empty
  std::size_t min() const;

  FinSet with(std::size_t x) const;
  FinSet unite(const FinSet& o) const;
  FinSet intersect(const FinSet& o) const;
  FinSet minus(const FinSet& o) const;
  bool subset_of(const FinSet& o) const;

  bool operator==(const FinSet& o) const;
  bool operator!=(const FinSet& o) const { return !(*this == o); }
  bool operator<(const FinSet& o) const;

  std::string hex() const;
  std::string str() const;

 private:
  void check(const FinSet& o) const;
  std::size_t n_ = 0;
  std::uint64_t mask_ = 0;
};

}  // namespace indcalc
