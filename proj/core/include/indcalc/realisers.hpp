#pragma once
#include "indcalc/finorder.hpp"
#include "indcalc/oracle.hpp"
#include "indcalc/step_functional.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace indcalc {

using Bits = std::vector<bool>;

// F : {0,1}^L -> [0..L]; leaf i carries bit k at position L-1-k of i (first bit most significant)
class DepthOracle {
 public:
  DepthOracle(std::size_t depth, std::vector<std::size_t> table);
  static DepthOracle constant(std::size_t depth, std::size_t v);

  std::size_t depth() const { return depth_; }
  std::size_t leaves() const { return table_.size(); }
  std::size_t apply(std::size_t leaf) const { return table_.at(leaf); }
  const std::vector<std::size_t>& table() const { return table_; }
  Bits bits(std::size_t leaf) const;
  // f-bar(F(f)) for the leaf
  Bits neighbourhood(std::size_t leaf) const;

 private:
  std::size_t depth_;
  std::vector<std::size_t> table_;
};

// leaves whose neighbourhoods cover {0,1}^L, by a greedy sweep in leaf order
std::vector<std::size_t> strong_hb(const DepthOracle& f);
std::vector<Bits> weak_from_strong(const DepthOracle& f, const std::vector<std::size_t>& leaves);
bool is_cover(const std::vector<Bits>& cover, std::size_t depth);

// least N with G <= N for every G such that G(g) <= F(f) whenever g-bar(F(f)) = f-bar(F(f))
std::size_t pincherle(const DepthOracle& f);
// the largest bound-respecting G; its maximum is pincherle(f)
std::vector<std::size_t> pincherle_witness(const DepthOracle& f);

// G_{n,x,y} over X, a subset of the pair codes below pair(B-1,B-1)+1, read as the first bits of
// a leaf of depth one more (the last bit is padding); cases 1-3 are cached per X
class PinConstruction {
 public:
  // F over [0..B), total; throws partiality_error when undefined on its trajectory
  PinConstruction(const StepFunctional& f);

  std::size_t universe() const { return k_; }
  std::size_t depth() const { return k_ + 1; }
  // cases 1-3; nullopt for case 4
  std::optional<std::size_t> spurious(std::uint64_t x) const { return cache_.at(x); }
  int case_of(std::uint64_t x) const { return cases_.at(x); }
  // one more than every case 1-3 output
  std::size_t threshold() const { return threshold_; }

  std::size_t value(std::size_t n, std::size_t x, std::size_t y, std::uint64_t xmask) const;
  DepthOracle oracle(std::size_t n, std::size_t x, std::size_t y) const;
  // the X-mask of a leaf, and back
  std::uint64_t mask_of_leaf(std::size_t leaf) const;
  std::size_t leaf_of_mask(std::uint64_t mask) const;
  // the true prewellordering as an X-mask
  std::uint64_t true_mask() const { return true_mask_; }
  const FinOrder& true_order() const { return true_order_; }

 private:
  void fill(std::uint64_t x);

  StepFunctional f_;
  std::size_t b_, k_, elems_;
  std::vector<std::pair<std::size_t, std::size_t>> decoded_;  // code -> (z, w)
  std::vector<std::vector<bool>> good_prefix_;
  std::vector<std::optional<std::size_t>> cache_;
  std::vector<int> cases_;
  std::size_t threshold_ = 1;
  std::uint64_t true_mask_ = 0;
  FinOrder true_order_;
};

Type2Oracle g_nxy(std::size_t n, std::size_t x, std::size_t y, const PinConstruction& pin);

using PincherleRealiser = std::function<std::size_t(const DepthOracle&)>;

// x <= y iff M(G_{n,x,y}) >= n at n = threshold
FinOrder recover_pwo(const StepFunctional& f, const PincherleRealiser& m = pincherle);
FinOrder recover_pwo(const PinConstruction& pin, const PincherleRealiser& m = pincherle);

}  // namespace indcalc
