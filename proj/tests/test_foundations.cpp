#include "indcalc/finfun.hpp"
#include "indcalc/finorder.hpp"
#include "indcalc/finset.hpp"
#include "indcalc/seqcode.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace indcalc;

namespace {

// Cantor pairing by counting diagonals, no closed form
Nat pair_by_walk(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  Nat before = 0;
  for (std::uint64_t d = 0; d < s; ++d) before += d + 1;
  return before + b;
}

}  // namespace

TEST(seqcode, pair_matches_diagonal_walk) {
  for (std::uint64_t a = 0; a < 30; ++a)
    for (std::uint64_t b = 0; b < 30; ++b) EXPECT_EQ(pair(a, b), pair_by_walk(a, b));
}

TEST(seqcode, unpair_inverts) {
  for (std::uint64_t c = 0; c < 2000; ++c) {
    auto [a, b] = unpair(c);
    EXPECT_EQ(pair(a, b), Nat(c));
  }
}

TEST(seqcode, examples) {
  EXPECT_EQ(encode_seq(std::vector<Nat>{}), Nat(0));
  EXPECT_EQ(encode_seq({0}), Nat(1));
  auto d = decode_seq(encode_seq({3, 5, 2}));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (std::vector<Nat>{3, 5, 2}));
}

TEST(seqcode, injective_on_short_sequences) {
  std::set<Nat> seen;
  std::size_t count = 0;
  for (std::size_t len = 0; len <= 3; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Nat> xs;
      std::size_t c = code;
      for (std::size_t i = 0; i < len; ++i, c /= 5) xs.push_back(c % 5);
      seen.insert(encode_seq(xs));
      ++count;
      auto back = decode_seq(encode_seq(xs));
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, xs);
    }
  }
  EXPECT_EQ(seen.size(), count);
}

TEST(seqcode, decode_rejects_outside_image) {
  EXPECT_FALSE(decode_seq(pair(0, 3)));
}

TEST(seqcode, big_codes_round_trip) {
  std::vector<Nat> xs{Nat(1) << 80, 7, Nat(1) << 100};
  auto back = decode_seq(encode_seq(xs));
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, xs);
}

TEST(finset, operations) {
  auto a = FinSet::of(5, {0, 2});
  auto b = FinSet::of(5, {2, 4});
  EXPECT_EQ(a.unite(b), FinSet::of(5, {0, 2, 4}));
  EXPECT_EQ(a.intersect(b), FinSet::of(5, {2}));
  EXPECT_EQ(a.minus(b), FinSet::of(5, {0}));
  EXPECT_TRUE(FinSet::of(5, {2}).subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(FinSet(5).min(), 5u);
  EXPECT_FALSE(a.contains(7));
  EXPECT_THROW(a.unite(FinSet(4)), base_mismatch);
}

TEST(finfun, prefix_cons_characteristic) {
  FinFun f{3, 0, 7};
  EXPECT_EQ(f.prefix(2), (FinFun{3, 0}));
  EXPECT_EQ(f.cons(9), (FinFun{9, 3, 0, 7}));
  EXPECT_EQ(f.at(10), 0u);
  EXPECT_EQ(f.support_set(3), FinSet::of(3, {0, 2}));
  EXPECT_EQ(FinFun::characteristic(FinSet::of(3, {1})), (FinFun{0, 1, 0}));
  EXPECT_EQ(code_of(f), encode_seq({3, 0, 7}));
}

namespace {

FinOrder weak(std::size_t n, std::initializer_list<std::size_t> dom, std::set<Edge> pairs) {
  return FinOrder{FinSet::of(n, dom), std::move(pairs), false};
}
FinOrder strict(std::size_t n, std::initializer_list<std::size_t> dom, std::set<Edge> pairs) {
  return FinOrder{FinSet::of(n, dom), std::move(pairs), true};
}

}  // namespace

TEST(finorder, well_founded_part_examples) {
  EXPECT_EQ(well_founded_part(strict(3, {0, 1, 2}, {})), FinSet::of(3, {0, 1, 2}));
  EXPECT_EQ(well_founded_part(strict(3, {0, 1, 2}, {{0, 1}, {1, 0}})), FinSet::of(3, {2}));
  EXPECT_EQ(well_founded_part(strict(3, {0, 1, 2}, {{0, 1}, {1, 2}})), FinSet::of(3, {0, 1, 2}));
}

TEST(finorder, ranks) {
  auto chain = strict(3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(rank_of(chain, 0), 0u);
  EXPECT_EQ(rank_of(chain, 2), 2u);
  auto flat = weak(2, {0, 1}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(rank_of(flat, 0), 0u);
  EXPECT_EQ(rank_of(flat, 1), 0u);
  EXPECT_THROW(rank_of(strict(3, {0, 1, 2}, {{0, 1}, {1, 0}}), 0), std::domain_error);
}

TEST(finorder, prewellordering_checks) {
  auto pwo = weak(3, {0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {0, 2}, {1, 2}});
  EXPECT_TRUE(is_preorder(pwo));
  EXPECT_TRUE(is_prewellordering(pwo));
  auto partial = weak(3, {0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  EXPECT_TRUE(is_preorder(partial));
  EXPECT_FALSE(is_prewellordering(partial));
  auto not_trans = weak(3, {0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  EXPECT_FALSE(is_preorder(not_trans));
}

// rank agrees with longest strict descending chain found by search
TEST(finorder, rank_is_longest_descent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 5;
    std::set<Edge> lt;
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t w = z + 1; w < n; ++w)
        if (rng() % 3 == 0) lt.insert({z, w});
    FinOrder o{FinSet::full(n), lt, true};
    std::vector<std::size_t> depth(n, 0);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t z = 0; z < w; ++z)
        if (lt.count({z, w})) depth[w] = std::max(depth[w], depth[z] + 1);
    for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(rank_of(o, x), depth[x]);
  }
}
