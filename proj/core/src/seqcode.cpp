#include "indcalc/seqcode.hpp"

namespace indcalc {

Nat pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> unpair(const Nat& c) {
  // s = floor((sqrt(8c+1)-1)/2)
  Nat s = (boost::multiprecision::sqrt(Nat(8 * c + 1)) - 1) / 2;
  Nat t = s * (s + 1) / 2;
  Nat b = c - t;
  return {s - b, b};
}

Nat encode_seq(const std::vector<Nat>& xs) {
  if (xs.empty()) return 0;
  Nat body = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) body = pair(xs[i], body);
  return pair(Nat(xs.size()), body);
}

Nat encode_seq(std::initializer_list<std::uint64_t> xs) {
  std::vector<Nat> v;
  for (auto x : xs) v.emplace_back(x);
  return encode_seq(v);
}

std::optional<std::vector<Nat>> decode_seq(const Nat& code) {
  if (code < 0) return std::nullopt;
  auto [k, body] = unpair(code);
  if (k == 0) {
    if (body != 0) return std::nullopt;
    return std::vector<Nat>{};
  }
  if (k > Nat(max_decode_length)) return std::nullopt;
  std::size_t len = k.convert_to<std::size_t>();
  std::vector<Nat> out;
  out.reserve(len);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    auto [x, rest] = unpair(body);
    out.push_back(x);
    body = rest;
  }
  out.push_back(body);
  return out;
}

}  // namespace indcalc
