#include "indcalc/induction.hpp"
#include "indcalc/realisers.hpp"
#include "indcalc/seqcode.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace indcalc;

namespace {

bool extends(const Bits& leaf, const Bits& s) {
  if (s.size() > leaf.size()) return false;
  return std::equal(s.begin(), s.end(), leaf.begin());
}

Bits leaf_bits(std::size_t leaf, std::size_t depth) {
  Bits b(depth);
  for (std::size_t k = 0; k < depth; ++k) b[k] = (leaf >> (depth - 1 - k)) & 1u;
  return b;
}

bool covers(const std::vector<Bits>& cover, std::size_t depth) {
  for (std::size_t leaf = 0; leaf < (std::size_t{1} << depth); ++leaf) {
    auto b = leaf_bits(leaf, depth);
    bool hit = false;
    for (const auto& s : cover) hit = hit || extends(b, s);
    if (!hit) return false;
  }
  return true;
}

DepthOracle table_of(std::size_t depth, std::uint64_t code) {
  std::vector<std::size_t> t(std::size_t{1} << depth);
  for (auto& v : t) v = code % (depth + 1), code /= depth + 1;
  return DepthOracle(depth, t);
}

// G(g) may not exceed F(f) for any leaf f whose neighbourhood contains g
std::vector<std::size_t> bounds(const DepthOracle& f) {
  const std::size_t n = f.leaves();
  std::vector<std::size_t> ub(n, f.depth());
  for (std::size_t fl = 0; fl < n; ++fl) {
    auto nb = leaf_bits(fl, f.depth());
    nb.resize(f.apply(fl));
    for (std::size_t g = 0; g < n; ++g)
      if (extends(leaf_bits(g, f.depth()), nb)) ub[g] = std::min(ub[g], f.apply(fl));
  }
  return ub;
}

std::size_t brute_pincherle(const DepthOracle& f) {
  // every G table with values 0..L+1, keep the bound-respecting ones
  const std::size_t n = f.leaves(), v = f.depth() + 2;
  auto ub = bounds(f);
  std::size_t best = 0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= v;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, mx = 0;
    bool ok = true;
    for (std::size_t g = 0; g < n; ++g, c /= v) {
      std::size_t val = c % v;
      if (val > ub[g]) ok = false;
      mx = std::max(mx, val);
    }
    if (ok) best = std::max(best, mx);
  }
  return best;
}

StepFunctional random_closing(std::size_t b, std::mt19937_64& rng) {
  std::vector<std::optional<std::uint64_t>> t(std::size_t{1} << b);
  for (auto& v : t) v = rng() & ((std::uint64_t{1} << b) - 1);
  return StepFunctional(b, t);
}

std::size_t code(std::size_t z, std::size_t w) { return pair(Nat(z), Nat(w)).convert_to<std::size_t>(); }

std::uint64_t mask_of(const FinOrder& o) {
  std::uint64_t m = 0;
  for (const auto& [z, w] : o.pairs) m |= std::uint64_t{1} << code(z, w);
  return m;
}

// F(A) = {2} u {k : k+1 in A} over B = 3
StepFunctional chain3() {
  return StepFunctional(3, [](const FinSet& a) -> std::optional<FinSet> {
    FinSet out = FinSet::of(3, {2});
    for (std::size_t k = 0; k + 1 < 3; ++k)
      if (a.contains(k + 1)) out = out.with(k);
    return out;
  });
}

}  // namespace

TEST(hb, examples) {
  auto zero = DepthOracle::constant(3, 0);
  EXPECT_EQ(strong_hb(zero).size(), 1u);
  auto w = weak_from_strong(zero, strong_hb(zero));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_TRUE(w[0].empty());
  EXPECT_EQ(strong_hb(DepthOracle::constant(3, 3)).size(), 8u);
  auto one = DepthOracle::constant(2, 1);
  auto leaves = strong_hb(one);
  ASSERT_EQ(leaves.size(), 2u);
  auto ws = weak_from_strong(one, leaves);
  EXPECT_EQ(ws[0].size(), 1u);
  EXPECT_NE(ws[0][0], ws[1][0]);
  EXPECT_THROW(DepthOracle(2, {0, 1, 3, 0}), std::invalid_argument);
}

TEST(hb, cover_exhaustive_small) {
  for (std::size_t depth = 1; depth <= 2; ++depth) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < (std::size_t{1} << depth); ++i) total *= depth + 1;
    for (std::uint64_t c = 0; c < total; ++c) {
      auto f = table_of(depth, c);
      auto leaves = strong_hb(f);
      auto w = weak_from_strong(f, leaves);
      EXPECT_TRUE(covers(w, depth));
      EXPECT_TRUE(is_cover(w, depth));
      for (std::size_t i = 0; i < leaves.size(); ++i) EXPECT_EQ(w[i], f.neighbourhood(leaves[i]));
    }
  }
}

TEST(hb, cover_exhaustive_depth_3) {
  // 4^8 tables
  for (std::uint64_t c = 0; c < 65536; ++c) {
    auto f = table_of(3, c);
    ASSERT_TRUE(covers(weak_from_strong(f, strong_hb(f)), 3)) << c;
  }
}

TEST(hb, is_cover_detects_gaps) {
  EXPECT_FALSE(is_cover({{false}}, 2));
  EXPECT_TRUE(is_cover({{false}, {true, false}, {true, true}}, 2));
}

TEST(pincherle, examples) {
  EXPECT_EQ(pincherle(DepthOracle::constant(3, 0)), 0u);
  EXPECT_EQ(pincherle(DepthOracle::constant(3, 3)), 3u);
}

TEST(pincherle, exhaustive_sweep_depth_2) {
  for (std::uint64_t c = 0; c < 81; ++c) {
    auto f = table_of(2, c);
    EXPECT_EQ(pincherle(f), brute_pincherle(f)) << c;
  }
}

TEST(pincherle, witness_is_valid_and_reaches_bound) {
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    std::mt19937_64 rng(depth);
    for (int i = 0; i < 300; ++i) {
      auto f = table_of(depth, rng());
      auto w = pincherle_witness(f);
      auto ub = bounds(f);
      std::size_t mx = 0;
      for (std::size_t g = 0; g < w.size(); ++g) {
        EXPECT_LE(w[g], ub[g]);
        mx = std::max(mx, w[g]);
      }
      EXPECT_EQ(mx, pincherle(f));
    }
  }
}

TEST(pincherle, random_bound_respecting_g) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    auto f = table_of(3, rng());
    auto ub = bounds(f);
    const std::size_t n = pincherle(f);
    for (std::size_t g = 0; g < ub.size(); ++g) EXPECT_LE(rng() % (ub[g] + 1), n);
  }
}

TEST(pincherle, below_strong_cover_values) {
  for (std::uint64_t c = 0; c < 65536; c += 3) {
    auto f = table_of(3, c);
    std::size_t mx = 0;
    for (auto leaf : strong_hb(f)) mx = std::max(mx, f.apply(leaf));
    EXPECT_LE(pincherle(f), mx) << c;
  }
}

TEST(g_nxy, full_order_gives_n) {
  PinConstruction pin(chain3());
  EXPECT_EQ(pin.universe(), 13u);
  EXPECT_EQ(pin.true_mask(), mask_of(stage_order(iterate(chain3()))));
  // 2 enters first, then 1, then 0
  EXPECT_EQ(pin.value(9, 2, 0, pin.true_mask()), 9u);
  EXPECT_EQ(pin.value(9, 0, 2, pin.true_mask()), 0u);
  EXPECT_EQ(pin.case_of(pin.true_mask()), 4);
  auto g = g_nxy(9, 2, 1, pin);
  std::vector<std::uint64_t> bits(13);
  for (std::size_t c = 0; c < 13; ++c) bits[c] = (pin.true_mask() >> c) & 1;
  EXPECT_EQ(g.apply(FinFun(bits)), Nat(9));
}

TEST(g_nxy, two_cycle_is_spurious) {
  PinConstruction pin(chain3());
  // break antisymmetry between 1 and 0 by hand: 0 below 1 while 1 below 0 stays
  std::uint64_t x = pin.true_mask() | (std::uint64_t{1} << code(0, 1));
  int k = pin.case_of(x);
  EXPECT_TRUE(k == 1 || k == 2) << k;
  EXPECT_EQ(pin.value(3, 0, 1, x), pin.value(10, 0, 1, x));
  // a preorder that is not transitive
  std::uint64_t bad = (std::uint64_t{1} << code(0, 0)) | (std::uint64_t{1} << code(1, 1)) |
                      (std::uint64_t{1} << code(2, 2)) | (std::uint64_t{1} << code(0, 1)) |
                      (std::uint64_t{1} << code(1, 2));
  EXPECT_EQ(pin.case_of(bad), 1);
}

TEST(g_nxy, initial_segment_is_case_3) {
  PinConstruction pin(chain3());
  // just {2}
  std::uint64_t seg = std::uint64_t{1} << code(2, 2);
  EXPECT_EQ(pin.case_of(seg), 3);
  EXPECT_EQ(pin.value(1, 2, 2, seg), pin.value(8, 2, 2, seg));
  // {2} below {1}
  std::uint64_t seg2 = seg | (std::uint64_t{1} << code(1, 1)) | (std::uint64_t{1} << code(2, 1));
  EXPECT_EQ(pin.case_of(seg2), 3);
}

TEST(g_nxy, n_independent_outside_case_4) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    PinConstruction pin(random_closing(3, rng));
    std::size_t case4 = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << pin.universe()); ++x) {
      if (pin.case_of(x) == 4) {
        ++case4;
        EXPECT_EQ(x, pin.true_mask());
        continue;
      }
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) ASSERT_EQ(pin.value(0, a, b, x), pin.value(7, a, b, x));
      EXPECT_LT(*pin.spurious(x), pin.threshold());
      // the neighbourhood of X of that length leaves out the true order
      const std::size_t k = *pin.spurious(x);
      const std::uint64_t low = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
      ASSERT_NE((x ^ pin.true_mask()) & low, 0u) << t << " " << x;
    }
    EXPECT_EQ(case4, 1u);
  }
}

TEST(g_nxy, leaf_mask_round_trip) {
  PinConstruction pin(chain3());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << 13); x += 37) EXPECT_EQ(pin.mask_of_leaf(pin.leaf_of_mask(x)), x);
}

TEST(recover, identity_is_empty) {
  auto o = recover_pwo(StepFunctional::identity(3));
  EXPECT_TRUE(o.pairs.empty());
  EXPECT_TRUE(o.domain.empty());
}

TEST(recover, chain_matches_stages) {
  auto o = recover_pwo(chain3());
  EXPECT_EQ(o, stage_order(iterate(chain3())));
}

TEST(recover, random_closing_inductions) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto f = random_closing(3, rng);
    EXPECT_EQ(recover_pwo(f), stage_order(iterate(f))) << t;
  }
}

TEST(recover, small_bases) {
  std::mt19937_64 rng(8);
  for (std::size_t b = 1; b <= 2; ++b)
    for (int t = 0; t < 20; ++t) {
      auto f = random_closing(b, rng);
      EXPECT_EQ(recover_pwo(f), stage_order(iterate(f)));
    }
}
