#include "indcalc/finset.hpp"

#include <bit>
#include <sstream>

namespace indcalc {

namespace {
std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }
}  // namespace

FinSet::FinSet(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n > max_base) throw std::invalid_argument("FinSet base_size above 64");
  if (mask & ~low_bits(n)) throw std::invalid_argument("FinSet member outside base");
}

FinSet FinSet::of(std::size_t n, std::initializer_list<std::size_t> xs) {
  FinSet s(n);
  for (auto x : xs) s = s.with(x);
  return s;
}

FinSet FinSet::full(std::size_t n) { return FinSet(n, low_bits(n)); }

std::size_t FinSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> FinSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::size_t FinSet::min() const { return mask_ ? static_cast<std::size_t>(std::countr_zero(mask_)) : n_; }

FinSet FinSet::with(std::size_t x) const {
  if (x >= n_) throw std::out_of_range("FinSet element " + std::to_string(x) + " outside base " + std::to_string(n_));
  return FinSet(n_, mask_ | (std::uint64_t{1} << x));
}

void FinSet::check(const FinSet& o) const {
  if (n_ != o.n_)
    throw base_mismatch("FinSet base sizes differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

FinSet FinSet::unite(const FinSet& o) const { check(o); return FinSet(n_, mask_ | o.mask_); }
FinSet FinSet::intersect(const FinSet& o) const { check(o); return FinSet(n_, mask_ & o.mask_); }
FinSet FinSet::minus(const FinSet& o) const { check(o); return FinSet(n_, mask_ & ~o.mask_); }
bool FinSet::subset_of(const FinSet& o) const { check(o); return (mask_ & ~o.mask_) == 0; }

bool FinSet::operator==(const FinSet& o) const { check(o); return mask_ == o.mask_; }

bool FinSet::operator<(const FinSet& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return mask_ < o.mask_;
}

std::string FinSet::hex() const {
  std::ostringstream os;
  os << "0x" << std::hex << mask_;
  return os.str();
}

std::string FinSet::str() const {
  std::string s = "{";
  bool first = true;
  for (auto x : members()) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

}  // namespace indcalc
