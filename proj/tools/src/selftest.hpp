#pragma once

#include "json_io.hpp"

namespace indcalc::cli {

// exhaustive sweeps over bases n <= max_n and depths L <= max_n, plus a seeded sample at B = 3
io::json selftest(std::size_t max_n, std::uint64_t seed, std::uint64_t budget);

}  // namespace indcalc::cli
