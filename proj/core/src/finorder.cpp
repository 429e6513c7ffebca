#include "indcalc/finorder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace indcalc {

std::set<Edge> strict_part(const FinOrder& order) {
  if (order.strict_given) return order.pairs;
  std::set<Edge> out;
  for (const auto& [z, w] : order.pairs)
    if (!order.pairs.count({w, z})) out.insert({z, w});
  return out;
}

FinSet well_founded_part(const FinOrder& order) {
  auto lt = strict_part(order);
  std::map<std::size_t, std::vector<std::size_t>> preds;
  for (const auto& [z, w] : lt) preds[w].push_back(z);
  FinSet w_part(order.domain.base_size());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto z : order.domain.members()) {
      if (w_part.contains(z)) continue;
      const auto& ps = preds[z];
      if (std::all_of(ps.begin(), ps.end(), [&](std::size_t p) { return w_part.contains(p); })) {
        w_part = w_part.with(z);
        grew = true;
      }
    }
  }
  return w_part;
}

std::size_t rank_of(const FinOrder& order, std::size_t x) {
  auto w_part = well_founded_part(order);
  if (!w_part.contains(x)) throw std::domain_error("rank_of: " + std::to_string(x) + " outside the well-founded part");
  auto lt = strict_part(order);
  std::map<std::size_t, std::size_t> rank;
  // members of W in an order where predecessors come first
  for (std::size_t done = 0; done < w_part.size();) {
    for (auto z : w_part.members()) {
      if (rank.count(z)) continue;
      std::size_t r = 0;
      bool ready = true;
      for (const auto& [a, b] : lt) {
        if (b != z) continue;
        auto it = rank.find(a);
        if (it == rank.end()) { ready = false; break; }
        r = std::max(r, it->second + 1);
      }
      if (ready) { rank[z] = r; ++done; }
    }
  }
  return rank.at(x);
}

bool is_preorder(const FinOrder& order) {
  for (const auto& [z, w] : order.pairs)
    if (!order.domain.contains(z) || !order.domain.contains(w)) return false;
  auto weak = order.pairs;
  if (order.strict_given) return false;
  for (auto z : order.domain.members())
    if (!weak.count({z, z})) return false;
  for (const auto& [a, b] : weak)
    for (const auto& [c, d] : weak)
      if (b == c && !weak.count({a, d})) return false;
  return true;
}

bool is_prewellordering(const FinOrder& order) {
  if (!is_preorder(order)) return false;
  auto dom = order.domain.members();
  for (auto z : dom)
    for (auto w : dom)
      if (!order.leq(z, w) && !order.leq(w, z)) return false;
  return well_founded_part(order) == order.domain;
}

}  // namespace indcalc
