#pragma once
#include "indcalc/finset.hpp"

#include <set>
#include <utility>

namespace indcalc {

using Edge = std::pair<std::size_t, std::size_t>;

// a relation on a finite domain; pairs are the weak relation unless strict_given,
// in which case they are read as the strict relation itself
struct FinOrder {
  FinSet domain;
  std::set<Edge> pairs;
  bool strict_given = false;

  bool leq(std::size_t z, std::size_t w) const { return pairs.count({z, w}) > 0; }
  bool operator==(const FinOrder& o) const {
    return domain == o.domain && pairs == o.pairs && strict_given == o.strict_given;
  }
};

std::set<Edge> strict_part(const FinOrder& order);
FinSet well_founded_part(const FinOrder& order);
// throws std::domain_error outside the well-founded part
std::size_t rank_of(const FinOrder& order, std::size_t x);
bool is_preorder(const FinOrder& order);
bool is_prewellordering(const FinOrder& order);

}  // namespace indcalc
