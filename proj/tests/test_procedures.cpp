#include "indcalc/calc.hpp"
#include "indcalc/compile.hpp"
#include "indcalc/family.hpp"
#include "indcalc/history.hpp"
#include "indcalc/programs.hpp"
#include "indcalc/seqcode.hpp"
#include "indcalc/validate.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace indcalc;

namespace {

constexpr std::uint64_t budget = 200'000;

QEntry entry(FinFun f, std::optional<std::uint64_t> a, std::optional<std::uint64_t> d = std::nullopt) {
  QEntry q{std::move(f), std::nullopt, std::nullopt};
  if (a) q.answer = Nat(*a);
  if (d) q.denotation = Nat(*d);
  return q;
}

CalcString calc(std::vector<QEntry> es, std::optional<std::uint64_t> v = std::nullopt) {
  CalcString s;
  s.entries = std::move(es);
  if (v) s.value = Nat(*v);
  return s;
}

bool chain_member(std::size_t n, std::size_t c, const FinSet& a) { return c + 1 == n || a.contains(c + 1); }

// the chain G on c^A for n = 3, with the answer at (flip_c, flip_mask) flipped
Type2Oracle chain_g(std::optional<std::pair<std::size_t, std::uint64_t>> flip = std::nullopt) {
  return set_oracle(3, [flip](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    bool v = chain_member(3, c, a);
    if (flip && flip->first == c && flip->second == a.mask()) v = !v;
    return Nat(v ? 1 : 0);
  });
}

std::vector<Type2Oracle> single_flips() {
  std::vector<Type2Oracle> out{chain_g()};
  for (std::size_t c = 0; c < 3; ++c)
    for (std::uint64_t m = 0; m < 8; ++m) out.push_back(chain_g(std::make_pair(c, m)));
  return out;
}

// the I-procedure calculation, built straight from the clauses
struct IOracle {
  std::vector<std::uint64_t> stages;
  std::vector<QEntry> entries;
  std::vector<std::optional<std::size_t>> new_elem;  // per stage, least element added next
};

IOracle i_oracle(const Type2Oracle& g, std::size_t n) {
  IOracle o;
  std::uint64_t f = 0;
  for (;;) {
    o.stages.push_back(f);
    std::uint64_t add = 0;
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::uint64_t> q{a};
      for (std::size_t k = 0; k < n; ++k) q.push_back((f >> k) & 1);
      auto ans = g.apply(FinFun(q));
      o.entries.push_back(entry(FinFun(q), ans->convert_to<std::uint64_t>()));
      if (*ans >= 1) add |= std::uint64_t{1} << a;
    }
    std::uint64_t fresh = add & ~f;
    if (!fresh) {
      o.new_elem.push_back(std::nullopt);
      break;
    }
    std::size_t x = 0;
    while (!((fresh >> x) & 1)) ++x;
    o.new_elem.push_back(x);
    f |= add;
  }
  for (std::size_t s = 0; s < o.stages.size(); ++s)
    for (std::size_t a = 0; a < n; ++a) {
      Nat first = o.new_elem[s] ? Nat(*o.new_elem[s] + 1) : Nat(0);
      o.entries[s * n + a].denotation = pair(first, Nat(a));
    }
  return o;
}

std::vector<BatteryItem> terminating() {
  std::vector<BatteryItem> out;
  for (auto& it : battery())
    if (it.expected) out.push_back(std::move(it));
  return out;
}

}  // namespace

TEST(matches, basics) {
  Type2Oracle f(2, 2, {Nat(0), Nat(1), Nat(1), Nat(0)});
  EXPECT_TRUE(matches(CalcString{}, f));
  EXPECT_TRUE(matches(calc({entry({0, 1}, 1)}), f));
  EXPECT_FALSE(matches(calc({entry({0, 1}, 2)}), f));
  EXPECT_TRUE(matches(calc({entry({0, 1}, std::nullopt)}), f));
}

TEST(consistency, examples) {
  auto s = calc({entry({0}, 0)});
  EXPECT_FALSE(consistency_check({s}));
  auto t = calc({entry({0}, 0), entry({1}, 1)});
  auto u = calc({entry({0}, 1), entry({2}, 1)});
  EXPECT_FALSE(consistency_check({t, u}));
  auto v = calc({entry({0}, 0), entry({2}, 1)});
  EXPECT_TRUE(consistency_check({t, v}));
  // one a proper prefix of the other
  EXPECT_TRUE(consistency_check({s, t}));
  // same moves, different values
  EXPECT_TRUE(consistency_check({calc({entry({0}, 0)}, 1), calc({entry({0}, 0)}, 2)}));
}

TEST(consistency, repeated_query_conflict) {
  auto s = calc({entry({0, 1}, 0), entry({0, 1, 0}, 1)});
  EXPECT_TRUE(self_conflict(s));
  EXPECT_FALSE(self_conflict(calc({entry({0, 1}, 0), entry({0, 1}, 0)})));
}

TEST(compile, initial_is_empty) {
  Env env;
  env.nums = {Nat(3)};
  auto c = compile_computation(s1(), env, Type2Oracle(1, 2, {Nat(0), Nat(0)}));
  EXPECT_TRUE(c.entries.empty());
  EXPECT_EQ(c.value, Nat(4));
}

TEST(compile, oracle_application_by_hand) {
  // F on (g0,g1), base 3, g0 most significant
  Type2Oracle f(2, 3, {Nat(0), Nat(1), Nat(2), Nat(1), Nat(2), Nat(0), Nat(2), Nat(0), Nat(1)});
  Env env;
  // inner {<8,2,<3>>}(c) queries (0,1) for every c; the outer query is (1,1)
  auto c = compile_computation(s8_2(s8_2(s3())), env, f);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_TRUE(same_query(c.entries[0].query, FinFun{0, 1}));
  EXPECT_EQ(c.entries[0].answer, Nat(1));
  EXPECT_EQ(c.entries[0].denotation, pair(Nat(1), Nat(0)));
  EXPECT_TRUE(same_query(c.entries[1].query, FinFun{0, 1}));
  EXPECT_EQ(c.entries[1].denotation, pair(Nat(2), Nat(0)));
  EXPECT_TRUE(same_query(c.entries[2].query, FinFun{1, 1}));
  EXPECT_EQ(c.entries[2].answer, Nat(2));
  EXPECT_EQ(c.entries[2].denotation, Nat(0));
  EXPECT_EQ(c.value, Nat(2));
  EXPECT_EQ(structure_error(c), "");
}

TEST(compile, composition_tags) {
  Type2Oracle f(2, 3, {Nat(0), Nat(1), Nat(2), Nat(1), Nat(2), Nat(0), Nat(2), Nat(0), Nat(1)});
  Env env;
  auto inner = compile_computation(s8_2(s3()), env, f);
  auto c = compile_computation(s4(s8_2(s3()), s8_2(s3())), env, f);
  ASSERT_EQ(c.size(), 2 * inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    EXPECT_EQ(c.entries[i].denotation, pair(Nat(0), *inner.entries[i].denotation));
    EXPECT_EQ(c.entries[inner.size() + i].denotation, pair(Nat(1), *inner.entries[i].denotation));
  }
}

TEST(compile, battery_structure) {
  for (const auto& it : terminating()) {
    auto c = compile_computation(it.e, it.env, it.env.oracles[0], budget);
    EXPECT_EQ(c.value, it.expected) << it.name;
    EXPECT_EQ(structure_error(c), "") << it.name;
    EXPECT_TRUE(matches(c, it.env.oracles[0])) << it.name;
    EXPECT_FALSE(self_conflict(c)) << it.name;
  }
}

TEST(compile, refuses_divergent) {
  for (const auto& it : battery()) {
    if (it.expected) continue;
    EXPECT_THROW(compile_computation(it.e, it.env, it.env.oracles[0], 20'000), nontermination_error) << it.name;
  }
}

TEST(compile, families_are_consistent_and_match_exactly) {
  for (const auto& it : terminating()) {
    auto tables = oracle_tables(2, it.family_range, it.family_values);
    auto fam = compiled_family(it.e, it.env, tables, budget);
    EXPECT_FALSE(consistency_check(fam.members)) << it.name;
    if (tables.size() > 100) continue;
    for (const auto& t : tables) {
      std::optional<CalcString> own;
      try {
        own = compile_computation(it.e, it.env, t, budget);
      } catch (const nontermination_error&) {
      }
      for (const auto& m : fam.members)
        if (matches(m, t)) {
          ASSERT_TRUE(own) << it.name;
          EXPECT_EQ(m, *own) << it.name;
        }
    }
  }
}

TEST(i_procedure, identity_induction) {
  auto g = set_oracle(3, [](std::size_t, const FinSet&) -> std::optional<Nat> { return Nat(0); });
  auto c = i_procedure_calc(g, 1);
  ASSERT_EQ(c.size(), 3u);
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(c.entries[a].denotation, pair(Nat(0), Nat(a)));
  EXPECT_EQ(c.value, Nat(0));
  EXPECT_EQ(limsup_block_level(c), 2u);
}

TEST(i_procedure, chain_by_hand) {
  auto c = i_procedure_calc(chain_g(), 0);
  ASSERT_EQ(c.size(), 12u);
  // new elements 2, 1, 0, then the closing stage
  const std::uint64_t first[] = {3, 2, 1, 0};
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(c.entries[s * 3 + a].denotation, pair(Nat(first[s]), Nat(a)));
  EXPECT_EQ(c.value, Nat(1));
  std::size_t stage_blocks = 0;
  for (const auto& b : c.blocks)
    if (b.level == 1) {
      ++stage_blocks;
      EXPECT_EQ(b.end - b.start, 3u);
    }
  EXPECT_EQ(stage_blocks, 4u);
}

TEST(i_procedure, flips_match_clause_oracle) {
  for (const auto& g : single_flips()) {
    CalcString c;
    try {
      c = i_procedure_calc(g, 2);
    } catch (const partiality_error&) {
      continue;
    }
    auto o = i_oracle(g, 3);
    ASSERT_EQ(c.size(), o.entries.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_TRUE(same_query(c.entries[i].query, o.entries[i].query));
      EXPECT_EQ(c.entries[i].answer, o.entries[i].answer);
      EXPECT_EQ(c.entries[i].denotation, o.entries[i].denotation);
    }
    EXPECT_EQ(c.value, Nat((o.stages.back() >> 2) & 1));
    EXPECT_EQ(structure_error(c), "");
  }
}

TEST(i_procedure, undefined_on_trajectory) {
  auto g = set_oracle(3, [](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    if (a.size() == 1) return std::nullopt;
    return Nat(chain_member(3, c, a) ? 1 : 0);
  });
  EXPECT_THROW(i_procedure_calc(g, 0), partiality_error);
}

TEST(next_of, i_procedure_steps) {
  auto fam = i_procedure_family(single_flips(), 0);
  ASSERT_FALSE(consistency_check(fam.members));
  auto first = next_of(fam, {});
  EXPECT_FALSE(first.final);
  EXPECT_FALSE(first.log);
  EXPECT_TRUE(same_query(first.query, FinFun{0, 0, 0, 0}));
  const auto& m = fam.members[0];
  auto done = next_of(fam, m.entries);
  EXPECT_TRUE(done.final);
  EXPECT_EQ(done.value, *m.value);
  auto bad = m.entries;
  bad.back().answer = *bad.back().answer + 5;
  EXPECT_THROW(next_of(fam, bad), prefix_error);
}

TEST(next_of, replays_every_member) {
  for (const auto& it : terminating()) {
    auto fam = compiled_family(it.e, it.env, oracle_tables(2, it.family_range, it.family_values), budget);
    for (std::size_t i = 0; i < fam.members.size(); i += 1 + fam.members.size() / 6) {
      const auto& f = fam.sources[i];
      std::vector<QEntry> prefix;
      for (;;) {
        auto s = next_of(fam, prefix);
        if (s.final) {
          EXPECT_EQ(s.value, *fam.members[i].value) << it.name;
          break;
        }
        QEntry q{s.query, std::nullopt, std::nullopt};
        if (!s.log) q.answer = f.apply(s.query);
        prefix.push_back(q);
        ASSERT_LE(prefix.size(), fam.members[i].size()) << it.name;
      }
      ASSERT_EQ(prefix.size(), fam.members[i].size()) << it.name;
      for (std::size_t k = 0; k < prefix.size(); ++k) EXPECT_TRUE(same_move(prefix[k], fam.members[i].entries[k]));
    }
  }
}

TEST(delay, singleton_is_zero) {
  auto c = i_procedure_calc(chain_g(), 0);
  ProcedureFamily fam{{c}, {chain_g()}};
  for (std::size_t b = 0; b < c.size(); ++b) EXPECT_EQ(delay_at(fam, c, b), 0u);
}

// non-final stage: wait for the least new element x; final stage: wait past every c outside f.
// exact for the base member of the single-flip family
TEST(delay, i_procedure_formula) {
  auto gs = single_flips();
  auto fam = i_procedure_family(gs, 0);
  ASSERT_LE(fam.members.size(), 50u);
  ASSERT_GE(fam.members.size(), 10u);
  std::size_t positive_inside = 0;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& c = fam.members[i];
    auto o = i_oracle(fam.sources[i], 3);
    for (std::size_t s = 0; s < o.stages.size(); ++s)
      for (std::size_t a = 0; a < 3; ++a) {
        std::size_t want = 0;
        if (o.new_elem[s]) {
          std::size_t x = *o.new_elem[s];
          want = a <= x ? x - a + 1 : 0;
        } else {
          std::optional<std::size_t> last;
          for (std::size_t c2 = a; c2 < 3; ++c2)
            if (!((o.stages[s] >> c2) & 1)) last = c2;
          want = last ? *last - a + 1 : 0;
        }
        // the family only holds single flips of the base, so other members may be decided sooner
        const std::size_t d = delay_at(fam, c, s * 3 + a);
        if (i == 0)
          EXPECT_EQ(d, want) << "stage " << s << " a " << a;
        else
          EXPECT_LE(d, want) << "member " << i << " stage " << s << " a " << a;
        if (o.new_elem[s] && a > *o.new_elem[s]) EXPECT_EQ(d, 0u);
        if (i == 0 && o.new_elem[s] && a <= *o.new_elem[s]) positive_inside += d > 0;
      }
  }
  EXPECT_GT(positive_inside, 0u);
}

TEST(delay, zero_without_induction) {
  for (const auto& it : terminating()) {
    if (induction_depth(it.e) != 0 || it.e->scheme == Scheme::s9) continue;
    auto fam = compiled_family(it.e, it.env, oracle_tables(2, it.family_range, it.family_values), budget);
    for (std::size_t i = 0; i < fam.members.size(); i += 1 + fam.members.size() / 10)
      for (std::size_t b = 0; b < fam.members[i].size(); ++b)
        EXPECT_EQ(delay_at(fam, fam.members[i], b), 0u) << it.name;
  }
}

TEST(validate, round_trip_battery) {
  for (const auto& it : terminating()) {
    auto c = compile_computation(it.e, it.env, it.env.oracles[0], budget);
    auto rep = representation_of(c);
    ASSERT_TRUE(std::holds_alternative<Representation>(rep)) << it.name;
    auto v = validate_representation(it.e, it.env, std::get<Representation>(rep));
    ASSERT_TRUE(accepted(v)) << it.name << ": " << std::get<Reject>(v).reason;
    EXPECT_EQ(std::get<Accept>(v).value, *it.expected) << it.name;
    EXPECT_EQ(calc_of(std::get<Representation>(rep)).entries, c.entries) << it.name;
  }
}

TEST(validate, empty_for_initial) {
  Env env;
  env.nums = {Nat(2)};
  auto v = validate_representation(s1(), env, Representation{{}, {}, Nat(3)});
  ASSERT_TRUE(accepted(v));
  EXPECT_EQ(std::get<Accept>(v).value, Nat(3));
  EXPECT_FALSE(accepted(validate_representation(s1(), env, Representation{{}, {}, Nat(4)})));
}

TEST(validate, mutations_rejected) {
  for (const auto& it : terminating()) {
    auto c = compile_computation(it.e, it.env, it.env.oracles[0], budget);
    std::map<std::string, int> kinds;
    for (const auto& m : mutations(c, 60, 1234)) {
      auto v = validate_flat(it.e, it.env, m.flat, m.value);
      EXPECT_FALSE(accepted(v)) << it.name << " survived " << m.kind;
      ++kinds[m.kind];
    }
    if (!c.entries.empty()) EXPECT_GE(kinds.size(), 3u) << it.name;
  }
}

TEST(validate, duplicate_denotation_rejected) {
  auto it = terminating();
  for (const auto& item : it) {
    if (item.name != "chain") continue;
    auto c = compile_computation(item.e, item.env, item.env.oracles[0], budget);
    auto flat = flat_of(c);
    flat[1].d = flat[0].d;
    EXPECT_FALSE(accepted(validate_flat(item.e, item.env, flat, c.value)));
  }
}

TEST(gamma, clauses) {
  Type2Oracle f(2, 3, {Nat(0), Nat(1), Nat(2), Nat(1), Nat(2), Nat(0), Nat(2), Nat(0), Nat(1)});
  Env env;
  auto c = compile_computation(s8_2(s8_2(s3())), env, f);
  ProcedureFamily fam{{c}, {f}};
  auto g = gamma_of(fam, f);
  auto one = g(CodeSet{});
  ASSERT_TRUE(one);
  auto d = decode_history(*one);
  ASSERT_TRUE(d);
  ASSERT_EQ(d->size(), 1u);
  EXPECT_EQ(d->entries[0], c.entries[0]);
  // not a prefix: fixed
  CodeSet junk = encode_entry(entry({2, 2}, 0, 9));
  auto same = g(junk);
  ASSERT_TRUE(same);
  EXPECT_EQ(*same, junk);
  auto h = honest_history(fam, f);
  auto full = decode_history(h);
  ASSERT_TRUE(full);
  EXPECT_EQ(*full, c);
  EXPECT_EQ(*g(h), h);
}

TEST(honest_history, identity_induction) {
  auto g = set_oracle(3, [](std::size_t, const FinSet&) -> std::optional<Nat> { return Nat(0); });
  auto fam = i_procedure_family({g}, 0);
  auto d = decode_history(honest_history(fam, g));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, fam.members[0]);
  std::size_t stage_blocks = 0;
  for (const auto& b : d->blocks) stage_blocks += b.level == 1;
  EXPECT_EQ(stage_blocks, 1u);
}

TEST(honest_history, i_procedure_family_round_trip) {
  auto fam = i_procedure_family(single_flips(), 0);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    auto d = decode_history(honest_history(fam, fam.sources[i]));
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, fam.members[i]);
  }
}

TEST(honest_history, battery_round_trip) {
  for (const auto& it : terminating()) {
    auto fam = compiled_family(it.e, it.env, oracle_tables(2, it.family_range, it.family_values), budget);
    for (std::size_t i = 0; i < fam.members.size(); i += 1 + fam.members.size() / 4) {
      auto d = decode_history(honest_history(fam, fam.sources[i]));
      ASSERT_TRUE(d) << it.name;
      EXPECT_EQ(*d, fam.members[i]) << it.name;
      EXPECT_EQ(d->value, eval_p(it.e, [&] {
                  Env e = it.env;
                  e.oracles = {fam.sources[i]};
                  return e;
                }(), budget).value)
          << it.name;
    }
  }
}

TEST(limsup, levels) {
  EXPECT_EQ(limsup_block_level(calc({entry({0}, 0, 0)})), 1u);
  std::map<std::string, std::size_t> want{{"succ", 1}, {"oracle", 1}, {"chain", 2}, {"ind-compose", 2},
                                          {"oracle-of-ind", 2}, {"nested-in", 3}, {"nested-out", 3}};
  for (const auto& it : terminating()) {
    auto w = want.find(it.name);
    if (w == want.end()) continue;
    auto c = compile_computation(it.e, it.env, it.env.oracles[0], budget);
    EXPECT_EQ(limsup_block_level(c), w->second) << it.name;
    EXPECT_EQ(limsup_block_level(c), induction_depth(it.e) + 1) << it.name;
  }
}

TEST(limsup, diverging_nesting_grows) {
  Env env;
  env.n = 2;
  env.nums = {Nat(0), nesting_program()->code};
  auto f = set_oracle(2, [](std::size_t, const FinSet&) -> std::optional<Nat> { return Nat(0); });
  std::size_t prev = 0;
  for (std::uint64_t b = 50; b <= 3200; b *= 2) {
    auto c = compile_prefix(nesting_program(), env, f, b);
    auto lvl = limsup_block_level(c);
    EXPECT_GE(lvl, prev) << b;
    prev = lvl;
  }
  EXPECT_GE(prev, 5u);
}
