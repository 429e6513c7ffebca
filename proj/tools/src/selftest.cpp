#include "selftest.hpp"

#include "indcalc/programs.hpp"
#include "indcalc/reductions.hpp"
#include "indcalc/validate.hpp"
#include "indcalc/compile.hpp"

#include <functional>
#include <random>

namespace indcalc::cli {

namespace {

struct Check {
  explicit Check(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  std::size_t cases = 0;
  std::string failure;
};

// f_{b+1} = f_b u F(f_b) on masks, nullopt when the table is undefined on the way
std::optional<std::uint64_t> loop_lfp(const std::vector<std::optional<std::uint64_t>>& t) {
  std::uint64_t a = 0;
  for (;;) {
    if (!t[a]) return std::nullopt;
    if ((*t[a] & ~a) == 0) return a;
    a |= *t[a];
  }
}

Check induction_sweep(std::size_t max_n) {
  Check c{"induction: every table with UNDEFINED entries, n <= " + std::to_string(max_n)};
  for (std::size_t n = 0; n <= max_n; ++n) {
    const std::size_t masks = std::size_t{1} << n, vals = masks + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < masks; ++i) total *= vals;
    for (std::size_t code = 0; code < total; ++code, ++c.cases) {
      std::vector<std::optional<std::uint64_t>> t;
      for (std::size_t i = 0, k = code; i < masks; ++i, k /= vals)
        t.push_back(k % vals == masks ? std::nullopt : std::optional<std::uint64_t>(k % vals));
      auto tr = iterate(StepFunctional(n, t));
      auto want = loop_lfp(t);
      if (tr.closed != want.has_value() || (want && tr.last().mask() != *want)) {
        c.failure = "table " + std::to_string(code) + " at n = " + std::to_string(n);
        return c;
      }
    }
  }
  return c;
}

Check single_valued_sweep(std::size_t max_n) {
  Check c{"single-valued induction recovers the fixed point, n <= " + std::to_string(max_n)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t masks = std::size_t{1} << n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < masks; ++i) total *= masks;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::optional<std::uint64_t>> t;
      for (std::size_t i = 0, k = code; i < masks; ++i, k /= masks) t.push_back(k % masks);
      StepFunctional f(n, t);
      if (f.apply(FinSet(n))->empty()) continue;
      auto sv = single_valued_of(f);
      ++c.cases;
      if (sv.bits(i0(sv.g)) != lfp(f)) {
        c.failure = "table " + std::to_string(code) + " at n = " + std::to_string(n);
        return c;
      }
    }
  }
  return c;
}

Check e2_sweep() {
  Check c{"e2 through induction, 0/1 functions of length <= 6"};
  for (std::size_t len = 1; len <= 6; ++len)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m, ++c.cases) {
      std::vector<std::uint64_t> v(len);
      for (std::size_t k = 0; k < len; ++k) v[k] = (m >> k) & 1;
      if (e2_via_ind(FinFun(v)) != (m != 0 ? 1 : 0)) {
        c.failure = "length " + std::to_string(len) + " mask " + std::to_string(m);
        return c;
      }
    }
  return c;
}

void each_depth_oracle(std::size_t max_l, const std::function<bool(const DepthOracle&)>& fn, Check& c) {
  for (std::size_t depth = 1; depth <= max_l; ++depth) {
    const std::size_t leaves = std::size_t{1} << depth;
    std::size_t total = 1;
    for (std::size_t i = 0; i < leaves; ++i) total *= depth + 1;
    for (std::size_t code = 0; code < total; ++code, ++c.cases) {
      std::vector<std::size_t> t;
      for (std::size_t i = 0, k = code; i < leaves; ++i, k /= depth + 1) t.push_back(k % (depth + 1));
      if (!fn(DepthOracle(depth, t))) {
        c.failure = "table " + std::to_string(code) + " at L = " + std::to_string(depth);
        return;
      }
    }
  }
}

// every G with values 0..L+1 bounded as the realiser requires; the largest maximum
std::size_t brute_pincherle(const DepthOracle& f) {
  const std::size_t n = f.leaves(), top = f.depth() + 1;
  std::vector<std::size_t> ub(n, top);
  for (std::size_t fl = 0; fl < n; ++fl) {
    auto nb = f.neighbourhood(fl);
    for (std::size_t g = 0; g < n; ++g) {
      auto bits = f.bits(g);
      if (std::equal(nb.begin(), nb.end(), bits.begin())) ub[g] = std::min(ub[g], f.apply(fl));
    }
  }
  std::size_t best = 0, total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= top + 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t mx = 0;
    bool ok = true;
    for (std::size_t g = 0, k = code; g < n; ++g, k /= top + 1) {
      ok = ok && k % (top + 1) <= ub[g];
      mx = std::max(mx, k % (top + 1));
    }
    if (ok) best = std::max(best, mx);
  }
  return best;
}

Check recover_sweep(std::size_t max_b) {
  Check c{"prewellordering recovered through the realiser, every total F with B <= " + std::to_string(max_b)};
  for (std::size_t b = 1; b <= max_b; ++b) {
    const std::size_t masks = std::size_t{1} << b;
    std::size_t total = 1;
    for (std::size_t i = 0; i < masks; ++i) total *= masks;
    for (std::size_t code = 0; code < total; ++code, ++c.cases) {
      std::vector<std::optional<std::uint64_t>> t;
      for (std::size_t i = 0, k = code; i < masks; ++i, k /= masks) t.push_back(k % masks);
      StepFunctional f(b, t);
      if (recover_pwo(f) != stage_order(iterate(f))) {
        c.failure = "table " + std::to_string(code) + " at B = " + std::to_string(b);
        return c;
      }
    }
  }
  return c;
}

Check recover_sample(std::uint64_t seed) {
  Check c{"prewellordering recovered through the realiser, 10 seeded F with B = 3"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10; ++i, ++c.cases) {
    std::vector<std::optional<std::uint64_t>> t(8);
    for (auto& v : t) v = rng() & 7u;
    StepFunctional f(3, t);
    if (recover_pwo(f) != stage_order(iterate(f))) {
      c.failure = "sample " + std::to_string(i);
      return c;
    }
  }
  return c;
}

Check battery_round_trip(std::uint64_t budget) {
  Check c{"battery values and validator round trip"};
  for (const auto& it : battery()) {
    if (!it.expected) continue;
    ++c.cases;
    auto r = eval_p(it.e, it.env, budget);
    if (!r.ok() || r.value != *it.expected) {
      c.failure = it.name + ": value";
      return c;
    }
    auto calc = compile_computation(it.e, it.env, it.env.oracles.at(0), budget);
    auto rep = representation_of(calc);
    auto* rp = std::get_if<Representation>(&rep);
    if (!rp) {
      c.failure = it.name + ": no representation";
      return c;
    }
    auto v = validate_representation(it.e, it.env, *rp, budget);
    if (!accepted(v) || std::get<Accept>(v).value != r.value) {
      c.failure = it.name + ": validator";
      return c;
    }
  }
  return c;
}

}  // namespace

io::json selftest(std::size_t max_n, std::uint64_t seed, std::uint64_t budget) {
  std::vector<std::function<Check()>> runs = {
      [&] { return induction_sweep(max_n); },
      [&] { return single_valued_sweep(max_n); },
      [] { return e2_sweep(); },
      [&] {
        Check c{"heine-borel covers, L <= " + std::to_string(max_n)};
        each_depth_oracle(max_n, [](const DepthOracle& f) { return is_cover(weak_from_strong(f, strong_hb(f)), f.depth()); }, c);
        return c;
      },
      [&] {
        Check c{"pincherle bound against every bounded G, L <= " + std::to_string(max_n)};
        each_depth_oracle(max_n, [](const DepthOracle& f) { return pincherle(f) == brute_pincherle(f); }, c);
        return c;
      },
      [&] { return recover_sweep(max_n); },
      [&] { return recover_sample(seed); },
      [&] { return battery_round_trip(budget); },
  };
  io::json checks = io::json::array();
  bool pass = true;
  for (auto& run : runs) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.failure = std::string("exception: ") + e.what();
    }
    io::json j;
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["pass"] = c.failure.empty();
    if (!c.failure.empty()) j["failure"] = c.failure;
    checks.push_back(j);
    pass = pass && c.failure.empty();
  }
  io::json out;
  out["checks"] = checks;
  out["pass"] = pass;
  out["version"] = io::format_version;
  return out;
}

}  // namespace indcalc::cli
