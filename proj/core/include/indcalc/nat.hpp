#pragma once
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indcalc {

// codes of nested indices outgrow 64 bits after two or three levels
using Nat = boost::multiprecision::mpz_int;

inline std::uint64_t saturate_u64(const Nat& x) {
  if (x > Nat(UINT64_MAX)) return UINT64_MAX;
  return x.convert_to<std::uint64_t>();
}

inline std::optional<std::size_t> to_index(const Nat& x, std::size_t bound) {
  if (x < 0 || x >= Nat(bound)) return std::nullopt;
  return x.convert_to<std::size_t>();
}

inline std::string to_string(const Nat& x) { return x.str(); }

}  // namespace indcalc
