#pragma once
#include "indcalc/induction.hpp"

namespace indcalc {

// relations on [0..n) as subsets of the n*n pair bits, pair (z,w) at bit z*n+w
std::size_t pair_bit(std::size_t n, std::size_t z, std::size_t w);
FinOrder order_of_bits(const FinSet& r, std::size_t n);
FinSet bits_of_order(const FinOrder& o, std::size_t n);
// {z : (z,z) in R}
FinSet relation_domain(const FinSet& r, std::size_t n);

// one step of H given the closed trajectory A_0..A_alpha of F
FinSet pwo_step(const FinSet& r, std::size_t n, const std::vector<FinSet>& trajectory);

// least fixed point of H from the empty relation
FinSet pwo_fixed_point(std::size_t n, const std::vector<FinSet>& trajectory);

struct PwoTranslation {
  std::size_t n = 0;
  std::vector<FinSet> trajectory;
  StepFunctional h;
  FinSet domain_of(const FinSet& r) const { return relation_domain(r, n); }
};

// throws partiality_error when F is undefined on its own trajectory
PwoTranslation pwo_translate(const StepFunctional& f);

}  // namespace indcalc
