#include "indcalc/validate.hpp"

#include "indcalc/compile.hpp"
#include "indcalc/pwo.hpp"
#include "indcalc/seqcode.hpp"

#include <random>
#include <span>

namespace indcalc {

namespace {

struct Item {
  Nat d;
  const FinFun* f;
  const std::optional<Nat>* a;
};

using Span = std::span<const Item>;
using Result = std::variant<Nat, std::string>;

bool failed(const Result& r) { return std::holds_alternative<std::string>(r); }

class Checker {
 public:
  explicit Checker(std::uint64_t budget) : budget_(budget) {}

  Result check(const Index& e, const Env& env, Span s, std::size_t depth) {
    if (++steps_ > budget_) return std::string("budget exhausted");
    if (depth > max_depth) return std::string("nesting too deep");
    const auto& node = *e;
    switch (node.scheme) {
      case Scheme::invalid:
        return "code " + node.code.str() + " is not an index";
      case Scheme::s1:
      case Scheme::s2:
      case Scheme::s3:
      case Scheme::s7: {
        if (!s.empty()) return std::string("initial computation with a nonempty string");
        auto r = Unfold(Comp{e, env}, Mode::partial).next().result;
        if (!r.ok()) return r.site;
        return r.value;
      }
      case Scheme::s6: {
        auto r = Unfold(Comp{e, env}, Mode::partial);
        auto st = r.next();
        if (!st.need) return st.result.site;
        return check(st.child.e, st.child.env, s, depth + 1);
      }
      case Scheme::s9: {
        if (env.nums.empty()) return std::string("S9 without an index argument");
        Env sub = env;
        sub.nums.erase(sub.nums.begin());
        return check(parse_index(env.nums[0]), sub, s, depth + 1);
      }
      case Scheme::s4:
        return composition(node, env, s, depth);
      case Scheme::s8_2:
        return application(node, env, s, depth);
      case Scheme::s8_3:
      case Scheme::s8_3h:
        return induction(node, env, s, depth);
    }
    return std::string("unknown scheme");
  }

 private:
  static constexpr std::size_t max_depth = 4000;

  // strips the head of each denotation, which must equal want
  static std::optional<std::vector<Item>> strip(Span s, const Nat& want) {
    std::vector<Item> out;
    for (const auto& it : s) {
      auto [h, t] = unpair(it.d);
      if (h != want) return std::nullopt;
      out.push_back(Item{t, it.f, it.a});
    }
    return out;
  }

  Result composition(const IndexNode& node, const Env& env, Span s, std::size_t depth) {
    std::size_t cut = 0;
    while (cut < s.size() && unpair(s[cut].d).first == 0) ++cut;
    auto first = strip(s.subspan(0, cut), Nat(0));
    auto second = strip(s.subspan(cut), Nat(1));
    if (!first || !second) return std::string("composition: denotations are not <0,d> followed by <1,d>");
    auto v = check(node.e2, env, *first, depth + 1);
    if (failed(v)) return v;
    Env sub = env;
    sub.nums.insert(sub.nums.begin(), std::get<Nat>(v));
    return check(node.e1, sub, *second, depth + 1);
  }

  Result application(const IndexNode& node, const Env& env, Span s, std::size_t depth) {
    if (s.empty()) return std::string("oracle application: no terminal entry");
    const Item& last = s.back();
    if (last.d != 0) return std::string("oracle application: last denotation is not <0,0>");
    if (!last.a->has_value()) return std::string("oracle application: terminal entry is a LOG mark");
    const FinFun& g = *last.f;
    const std::size_t k = g.length();
    Span body = s.subspan(0, s.size() - 1);
    std::size_t pos = 0;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t end = pos;
      while (end < body.size() && unpair(body[end].d).first == Nat(c + 1)) ++end;
      auto part = strip(body.subspan(pos, end - pos), Nat(c + 1));
      Env sub = env;
      sub.nums.insert(sub.nums.begin(), Nat(c));
      auto v = check(node.e1, sub, *part, depth + 1);
      if (failed(v)) return "oracle application, argument " + std::to_string(c) + ": " + std::get<std::string>(v);
      if (saturate_u64(std::get<Nat>(v)) != g.at(c))
        return "oracle application: g(" + std::to_string(c) + ") does not match its subcalculation";
      pos = end;
    }
    if (pos != body.size()) return std::string("oracle application: entries outside the argument intervals");
    return **last.a;
  }

  Result induction(const IndexNode& node, const Env& env, Span s, std::size_t depth) {
    if (env.nums.empty()) return std::string("induction without the argument b");
    const std::size_t n = env.n;
    if (n > FinSet::max_base || (node.scheme == Scheme::s8_3h && n * n > FinSet::max_base))
      return std::string("induction base too large");
    struct Query {
      const FinFun* g;
      Nat a;
      Nat d1;
    };
    std::vector<Query> queries;
    std::size_t pos = 0;
    while (pos < s.size()) {
      auto [d1, d2] = unpair(s[pos].d);
      if (d2 != 0 || s[pos].a->has_value()) return std::string("induction: interval does not start with a LOG head <d1,0>");
      std::size_t end = pos + 1;
      std::vector<Item> body;
      while (end < s.size()) {
        auto [h, t] = unpair(s[end].d);
        if (h != d1 || t == 0) break;
        body.push_back(Item{t - 1, s[end].f, s[end].a});
        ++end;
      }
      Env sub = env;
      sub.funs.insert(sub.funs.begin(), *s[pos].f);
      sub.nums.erase(sub.nums.begin());
      auto v = check(node.e1, sub, body, depth + 1);
      if (failed(v)) return "induction step: " + std::get<std::string>(v);
      queries.push_back(Query{s[pos].f, std::get<Nat>(v), d1});
      pos = end;
    }
    // replay the I-procedure on the collected (g, a, d1)
    std::vector<FinSet> stages{FinSet(n)};
    std::size_t i = 0;
    bool closed = n == 0;
    while (!closed) {
      FinSet next(n);
      for (std::size_t a = 0; a < n; ++a, ++i) {
        if (i >= queries.size()) return std::string("induction: calculation stops inside a stage");
        if (!same_query(*queries[i].g, stage_query(a, stages.back())))
          return "induction: query " + std::to_string(i) + " is not a^f_beta";
        if (queries[i].a >= 1) next = next.with(a);
      }
      if (next.subset_of(stages.back())) closed = true;
      else stages.push_back(stages.back().unite(next));
    }
    if (i != queries.size()) return std::string("induction: queries after the closing stage");
    auto want = i_denotations(stages, n, true);
    for (std::size_t k = 0; k < queries.size(); ++k)
      if (queries[k].d1 != *want[k]) return "induction: denotation of query " + std::to_string(k) + " is off";
    auto b = to_index(env.nums[0], n);
    if (node.scheme == Scheme::s8_3) return Nat(b && stages.back().contains(*b) ? 1 : 0);
    FinSet r = pwo_fixed_point(n, stages);
    return Nat(b && relation_domain(r, n).contains(*b) ? 1 : 0);
  }

  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

}  // namespace

Verdict validate_flat(const Index& e, const Env& env, const std::vector<FlatEntry>& flat,
                      const std::optional<Nat>& value, std::uint64_t budget) {
  auto rep = representation_of(flat, value);
  if (auto* err = std::get_if<std::string>(&rep)) return Reject{*err};
  return validate_representation(e, env, std::get<Representation>(rep), budget);
}

Verdict validate_representation(const Index& e, const Env& env, const Representation& r, std::uint64_t budget) {
  for (const auto& d : r.chain)
    if (d < 0) return Reject{"negative denotation"};
  CalcString s = calc_of(r);
  if (auto c = self_conflict(s))
    return Reject{"query at " + std::to_string(c->first) + " and " + std::to_string(c->second) + " answered twice"};
  std::vector<Item> items;
  for (const auto& d : r.chain) {
    const auto& [f, a] = r.entries.at(d);
    items.push_back(Item{d, &f, &a});
  }
  Env sub = env;
  sub.oracles = {Type2Oracle()};
  Checker checker(budget);
  auto v = checker.check(e, sub, items, 0);
  if (auto* err = std::get_if<std::string>(&v)) return Reject{*err};
  if (r.value && *r.value != std::get<Nat>(v)) return Reject{"stated value differs from the forced value"};
  return Accept{std::get<Nat>(v)};
}

std::vector<Mutation> mutations(const CalcString& s, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto base = flat_of(s);
  std::vector<Mutation> out;
  const char* kinds[] = {"d+1", "d-1", "first+1", "second+1", "bit", "query", "star", "delete", "swap", "value"};
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < count * 50) {
    std::string kind = kinds[rng() % std::size(kinds)];
    Mutation m{kind, base, s.value};
    if (kind == "value") {
      m.value = s.value ? *s.value + 1 : Nat(0);
      out.push_back(std::move(m));
      continue;
    }
    if (base.empty()) continue;
    std::size_t p = rng() % base.size();
    auto& x = m.flat[p];
    if (kind == "d+1") {
      x.d += 1;
    } else if (kind == "d-1") {
      if (x.d == 0) continue;
      x.d -= 1;
    } else if (kind == "first+1") {
      auto [h, t] = unpair(x.d);
      x.d = pair(h + 1, t);
    } else if (kind == "second+1") {
      auto [h, t] = unpair(x.d);
      x.d = pair(h, t + 1);
    } else if (kind == "bit") {
      std::size_t bits = x.d == 0 ? 1 : msb(x.d) + 2;
      bit_flip(x.d, static_cast<unsigned>(rng() % bits));
    } else if (kind == "query") {
      if (x.f.length() == 0) continue;
      auto v = x.f.values();
      v[rng() % v.size()] += 1;
      x.f = FinFun(std::move(v));
    } else if (kind == "star") {
      if (x.a) x.a.reset();
      else x.a = Nat(0);
    } else if (kind == "delete") {
      m.flat.erase(m.flat.begin() + static_cast<std::ptrdiff_t>(p));
    } else if (kind == "swap") {
      if (p + 1 >= base.size()) continue;
      std::swap(m.flat[p], m.flat[p + 1]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace indcalc
