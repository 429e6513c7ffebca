#include "indcalc/finfun.hpp"

#include "indcalc/seqcode.hpp"

#include <stdexcept>

namespace indcalc {

FinFun FinFun::characteristic(const FinSet& s) {
  std::vector<std::uint64_t> v(s.base_size(), 0);
  for (auto x : s.members()) v[x] = 1;
  return FinFun(std::move(v));
}

std::uint64_t FinFun::at(const Nat& a) const {
  auto i = to_index(a, v_.size());
  return i ? v_[*i] : 0;
}

FinFun FinFun::prefix(std::size_t k) const {
  if (k > v_.size()) throw std::out_of_range("prefix longer than FinFun");
  return FinFun(std::vector<std::uint64_t>(v_.begin(), v_.begin() + static_cast<std::ptrdiff_t>(k)));
}

FinFun FinFun::cons(std::uint64_t a) const {
  std::vector<std::uint64_t> v;
  v.reserve(v_.size() + 1);
  v.push_back(a);
  v.insert(v.end(), v_.begin(), v_.end());
  return FinFun(std::move(v));
}

FinSet FinFun::support_set(std::size_t n) const {
  FinSet s(n);
  for (std::size_t k = 0; k < n && k < v_.size(); ++k)
    if (v_[k] > 0) s = s.with(k);
  return s;
}

Nat code_of(const FinFun& f) {
  std::vector<Nat> xs;
  xs.reserve(f.length());
  for (auto x : f.values()) xs.emplace_back(x);
  return encode_seq(xs);
}

}  // namespace indcalc
