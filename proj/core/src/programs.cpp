#include "indcalc/programs.hpp"

#include "indcalc/seqcode.hpp"

namespace indcalc {

namespace {

Type2Oracle default_oracle() {
  // support 2, a few values; stands in for F when the program never consults it
  return Type2Oracle(2, 3, {Nat(0), Nat(1), Nat(2), Nat(1), Nat(2), Nat(0), Nat(2), Nat(0), Nat(1)});
}

Env env_of(std::vector<FinFun> funs, std::vector<Nat> nums, std::size_t n, Type2Oracle o = default_oracle()) {
  return Env{{std::move(o)}, std::move(funs), std::move(nums), n};
}

// the chain F(A) = {n-1} u {k : k+1 in A}
bool chain_member(std::size_t n, std::size_t c, const FinSet& a) { return c + 1 == n || a.contains(c + 1); }

// suffix sets {k..n-1} are exactly the chain trajectory
bool on_chain(std::size_t n, const FinSet& a) {
  std::size_t m = a.members().empty() ? n : a.min();
  return a == FinSet(n, m >= n ? 0 : ((n >= 64 ? ~0ULL : ((1ULL << n) - 1)) & ~((1ULL << m) - 1)));
}

}  // namespace

Index diagonal() { return s4(s9(), s3()); }

Index loop_index() { return s4(diagonal(), s2(diagonal()->code)); }

Index read_c() { return s4(s7(), s2(0)); }

Type2Oracle set_oracle(std::size_t n, const std::function<std::optional<Nat>(std::size_t, const FinSet&)>& g) {
  std::size_t range = std::max<std::size_t>(n, 2);
  std::size_t cells = 1;
  for (std::size_t i = 0; i <= n; ++i) cells *= range;
  std::vector<std::optional<Nat>> table(cells);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    std::vector<std::size_t> digits(n + 1);
    std::size_t x = idx;
    for (std::size_t i = n + 1; i-- > 0;) {
      digits[i] = x % range;
      x /= range;
    }
    bool ok = digits[0] < n;
    std::uint64_t mask = 0;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      if (digits[i] > 1) ok = false;
      else if (digits[i]) mask |= 1ULL << (i - 1);
    }
    if (ok) table[idx] = g(digits[0], FinSet(n, mask));
  }
  return Type2Oracle(n + 1, range, std::move(table));
}

Index e2_program() {
  Index dx = s4(s6(s7(), {0}, {1, 0}, {0, 1}), read_c());
  return s4(s9(), s8_2(dx));
}

Type2Oracle e2_selector() {
  // f(c) = 0: look at A(c+1); otherwise answer 1
  Index p = s4(s7(), s4(s1(), s4(s1(), read_c())));
  return Type2Oracle(1, 2, {p->code, s2(1)->code});
}

Env e2_env(const FinFun& f, std::size_t b) { return Env{{e2_selector()}, {f}, {Nat(b)}, f.length()}; }

Index dispatch_program() { return s4(s9(), s8_2(s7())); }

Index gandy_program() { return s4(s9(), s8_2(s6(s3(), {0}, {}, {1, 0}))); }

Type2Oracle gandy_oracle(std::size_t count, const std::vector<std::size_t>& winners) {
  std::vector<std::optional<Nat>> t(count, loop_index()->code);
  for (auto k : winners) t.at(k) = s2(7)->code;
  return Type2Oracle(1, count, std::move(t));
}

Index nesting_program() {
  // D on nums (X) runs X on nums (X, X) with the enlarged function list
  Index d = s4(s4(s9(), s3()), s3());
  return s8_3(d);
}

std::vector<BatteryItem> battery() {
  std::vector<BatteryItem> out;
  auto add = [&](std::string name, Index e, Env env, std::optional<std::uint64_t> v, bool partial = false) {
    std::optional<Nat> val;
    if (v) val = Nat(*v);
    out.push_back(BatteryItem{std::move(name), std::move(e), std::move(env), partial, val});
  };
  // queries of the form (c, A(0)) with c < 3
  auto set_family = [&](std::vector<Nat> values) {
    out.back().family_range = 3;
    out.back().family_values = std::move(values);
  };
  const Nat zero_idx = s2(0)->code, one_idx = s2(1)->code;

  add("succ", s1(), env_of({}, {3}, 0), 4);
  add("const", s2(5), env_of({}, {}, 0), 5);
  add("ident", s3(), env_of({}, {4, 1}, 0), 4);
  add("fun-app", s7(), env_of({FinFun{7, 8, 9}}, {1}, 3), 8);
  add("compose", s4(s1(), s3()), env_of({}, {2}, 0), 3);
  add("perm-nums", s6(s3(), {0}, {}, {1, 0}), env_of({}, {4, 9}, 0), 9);
  add("perm-funs", s6(s7(), {0}, {1, 0}, {0}), env_of({FinFun{1, 2}, FinFun{5, 6}}, {1}, 2), 6);
  add("universal", s9(), env_of({}, {s1()->code, 6}, 0), 7);
  // F(0,1) = 1 for the default oracle
  add("oracle", s8_2(s3()), env_of({}, {}, 0), 1);
  // F(1,2) = 0, plus one
  add("oracle-compose", s4(s1(), s8_2(s4(s1(), s3()))), env_of({}, {}, 0), 1);
  set_family({0, 1});

  const auto sel = e2_selector().table();
  const std::vector<Nat> e2_values{*sel[0], *sel[1], loop_index()->code};
  const std::vector<Nat> gandy_values{loop_index()->code, s2(7)->code};
  add("e2-hit", s8_3(e2_program()), e2_env(FinFun{0, 0, 1}, 0), 1);
  out.back().family_values = e2_values;
  add("e2-miss", s8_3(e2_program()), e2_env(FinFun{0, 0, 0}, 0), 0);
  out.back().family_values = e2_values;
  add("e2-n4", s8_3(e2_program()), e2_env(FinFun{0, 1, 0, 0}, 1), 1);
  out.back().family_values = e2_values;
  add("e2-n4-out", s8_3(e2_program()), e2_env(FinFun{0, 1, 0, 0}, 3), 0);
  out.back().family_values = e2_values;

  const std::size_t n = 3;
  auto chain_tab = set_oracle(n, [](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    return Nat(chain_member(3, c, a) ? 1 : 0);
  });
  add("chain", s8_3(s8_2(s7())), env_of({}, {0}, n, chain_tab), 1);
  set_family({0, 1});
  auto chain_sel = set_oracle(n, [&](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    return chain_member(3, c, a) ? one_idx : zero_idx;
  });
  add("chain-dispatch", s8_3(dispatch_program()), env_of({}, {0}, n, chain_sel), 1);
  set_family({zero_idx, one_idx});

  auto holey = set_oracle(n, [](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    if (!on_chain(3, a) && c == 0) return std::nullopt;
    return Nat(chain_member(3, c, a) ? 1 : 0);
  });
  add("partial-null", s8_3(s8_2(s7())), env_of({}, {0}, n, holey), 1, true);
  set_family({0, 1});
  auto looping = set_oracle(n, [&](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    if (!on_chain(3, a) && c == 1) return loop_index()->code;
    return chain_member(3, c, a) ? one_idx : zero_idx;
  });
  add("partial-loop", s8_3(dispatch_program()), env_of({}, {0}, n, looping), 1, true);
  set_family({zero_idx, one_idx});
  auto garbage = set_oracle(n, [&](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    if (!on_chain(3, a) && c == 2) return encode_seq({5});
    return chain_member(3, c, a) ? one_idx : zero_idx;
  });
  add("partial-noindex", s8_3(dispatch_program()), env_of({}, {1}, n, garbage), 1, true);
  set_family({zero_idx, one_idx});

  add("ind-empty", s8_3(s2(0)), env_of({}, {0}, 2), 0);
  add("ind-full", s8_3(s2(1)), env_of({}, {1}, 2), 1);

  // inner lfp {1,2}: the inner F is the chain without 0
  auto inner = set_oracle(n, [](std::size_t c, const FinSet& a) -> std::optional<Nat> {
    return Nat(c >= 1 && chain_member(3, c, a) ? 1 : 0);
  });
  Index nested = s8_3(s4(s8_3(s8_2(s7())), read_c()));
  add("nested-in", nested, env_of({}, {1}, n, inner), 1);
  set_family({0, 1});
  add("nested-out", nested, env_of({}, {0}, n, inner), 0);
  set_family({0, 1});
  add("ind-compose", s4(s1(), s8_3(s8_2(s7()))), env_of({}, {0}, n, chain_tab), 2);
  set_family({0, 1});
  // g = (1,1) is the lfp {0,1}; default F(1,1) = 2
  add("oracle-of-ind", s8_2(s8_3(s2(1))), env_of({}, {}, 2), 2);
  add("universal-ind", s9(), env_of({}, {s8_3(s2(1))->code, 0}, 2), 1);
  add("gandy-winner", gandy_program(), env_of({}, {1}, 0, gandy_oracle(2, {1})), 7);
  out.back().family_values = gandy_values;

  add("diagonal", diagonal(), env_of({}, {diagonal()->code}, 0), std::nullopt);
  add("not-an-index", parse_index(5), env_of({}, {}, 0), std::nullopt);
  add("gandy-loser", gandy_program(), env_of({}, {0}, 0, gandy_oracle(2, {1})), std::nullopt);
  add("oracle-undefined", s8_2(s4(s1(), s1())), env_of({}, {}, 0), std::nullopt);
  return out;
}

}  // namespace indcalc
