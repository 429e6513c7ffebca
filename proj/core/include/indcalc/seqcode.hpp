#pragma once
#include "indcalc/nat.hpp"

namespace indcalc {

// longer sequences are refused by decode_seq
inline constexpr std::size_t max_decode_length = 1u << 20;

Nat pair(const Nat& a, const Nat& b);
// inverse of pair
std::pair<Nat, Nat> unpair(const Nat& c);

// <x1..xk> = pair(k, pair(x1, pair(x2, ... pair(x_{k-1}, x_k))))
Nat encode_seq(const std::vector<Nat>& xs);
Nat encode_seq(std::initializer_list<std::uint64_t> xs);
// nullopt for codes outside the image, e.g. pair(0, b) with b != 0
std::optional<std::vector<Nat>> decode_seq(const Nat& code);

}  // namespace indcalc
