#include "indcalc/history.hpp"

#include "indcalc/seqcode.hpp"

#include <algorithm>
#include <map>

namespace indcalc {

namespace {

Nat tagged(unsigned tag, const Nat& body) { return pair(Nat(tag), body); }

Nat triple(const Nat& a, const Nat& b, const Nat& c) { return encode_seq(std::vector<Nat>{a, b, c}); }

std::optional<std::array<Nat, 3>> untriple(const Nat& x) {
  auto v = decode_seq(x);
  if (!v || v->size() != 3) return std::nullopt;
  return std::array<Nat, 3>{(*v)[0], (*v)[1], (*v)[2]};
}

std::optional<FinFun> fun_of_code(const Nat& code) {
  auto v = decode_seq(code);
  if (!v) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (const auto& x : *v) {
    if (x > Nat(UINT64_MAX)) return std::nullopt;
    out.push_back(x.convert_to<std::uint64_t>());
  }
  return FinFun(std::move(out));
}

void add_order(CodeSet& out, const std::vector<Nat>& before, const Nat& d) {
  for (const auto& b : before) out.insert(tagged(1, pair(b, d)));
}

CodeSet block_code(const Block& b) { return {tagged(3, triple(Nat(b.start), Nat(b.end), Nat(b.level)))}; }

// one level of the nested simulation: positions from base on, inside a block of the given level
struct Context {
  const ProcedureFamily& fam;
  const Type2Oracle& f;
  std::size_t base;
  std::size_t level;
  std::vector<QEntry> outer;  // moves before base
};

std::vector<QEntry> moves_of(const Context& ctx, const CalcString& local) {
  std::vector<QEntry> out = ctx.outer;
  for (const auto& q : local.entries) out.push_back(QEntry{q.query, q.answer, std::nullopt});
  return out;
}

bool valid_here(const Context& ctx, const CalcString& local) {
  auto prefix = moves_of(ctx, local);
  auto ids = consistent_members(ctx.fam, prefix);
  if (ids.empty()) return false;
  const auto& rep = ctx.fam.members[ids.front()];
  for (std::size_t i = 0; i < local.entries.size(); ++i) {
    const auto& d = local.entries[i].denotation;
    if (ctx.level == 0) {
      if (d != rep.entries[i].denotation) return false;
    } else if (d != Nat(i)) {
      return false;
    }
  }
  if (ctx.level > 0 && local.value) return false;
  return true;
}

struct Run {
  CalcString local;  // local positions and denotations, blocks relative to the context base
};

Run run_block(const Context& ctx);

// Gamma at a context; nullopt marks a fixed X
std::optional<CodeSet> step(const Context& ctx, const CodeSet& x) {
  auto decoded = decode_history(x);
  if (!decoded || !valid_here(ctx, *decoded)) return std::nullopt;
  const CalcString& local = *decoded;
  auto prefix = moves_of(ctx, local);
  const std::size_t p = prefix.size();
  std::vector<Nat> ds;
  for (const auto& q : local.entries) ds.push_back(*q.denotation);

  if (ctx.level > 0 && block_closes(ctx.fam, prefix, OpenBlock{ctx.base, ctx.level})) return std::nullopt;
  auto next = next_of(ctx.fam, prefix);
  if (next.final) {
    if (ctx.level > 0) throw tameness_error("calculation ends inside an open block");
    if (local.value) return std::nullopt;
    CodeSet out = x;
    out.insert(tagged(2, next.value));
    auto whole = block_code(Block{0, p, 0});
    out.insert(whole.begin(), whole.end());
    return out;
  }

  auto open = open_blocks(ctx.fam, prefix);
  for (const auto& b : open) {
    if (b.start != p || b.level != ctx.level + 1) continue;
    Context inner{ctx.fam, ctx.f, p, b.level, prefix};
    Run r = run_block(inner);
    auto full = prefix;
    for (const auto& q : r.local.entries) full.push_back(QEntry{q.query, q.answer, std::nullopt});
    auto re = redenote(ctx.fam, full, b);
    // denotations one level up are local positions unless this is the top
    CodeSet out = x;
    std::vector<Nat> before = ds;
    for (std::size_t i = 0; i < r.local.entries.size(); ++i) {
      QEntry q = r.local.entries[i];
      q.denotation = ctx.level == 0 ? re[i] : Nat(p - ctx.base + i);
      auto codes = encode_entry(q);
      out.insert(codes.begin(), codes.end());
      add_order(out, before, *q.denotation);
      before.push_back(*q.denotation);
    }
    const std::size_t off = p - ctx.base;
    for (const auto& bl : r.local.blocks) {
      auto c = block_code(Block{bl.start + off, bl.end + off, bl.level});
      out.insert(c.begin(), c.end());
    }
    auto c = block_code(Block{off, off + r.local.entries.size(), b.level});
    out.insert(c.begin(), c.end());
    return out;
  }

  QEntry q{next.query, std::nullopt, std::nullopt};
  if (!next.log) {
    auto a = ctx.f.apply(next.query);
    if (!a) throw tameness_error("the oracle is undefined on a query of the family");
    q.answer = *a;
  }
  prefix.push_back(q);
  q.denotation = ctx.level == 0 ? denote(ctx.fam, prefix) : Nat(p - ctx.base);
  CodeSet out = x;
  auto codes = encode_entry(q);
  out.insert(codes.begin(), codes.end());
  add_order(out, ds, *q.denotation);
  return out;
}

Run run_block(const Context& ctx) {
  auto t = iterate_sets(CodeSet{}, [&](const CodeSet& x) -> std::optional<CodeSet> {
    auto r = step(ctx, x);
    return r ? *r : x;
  }, 1u << 20);
  auto decoded = decode_history(t.stages.back());
  if (!decoded) throw tameness_error("block history does not decode");
  return Run{*decoded};
}

}  // namespace

CodeSet encode_entry(const QEntry& q) {
  CodeSet out;
  Nat a = q.answer ? *q.answer + 1 : Nat(0);
  for (std::size_t m = 0; m <= q.query.length(); ++m)
    out.insert(tagged(0, triple(code_of(q.query.prefix(m)), a, q.denotation.value_or(Nat(0)))));
  return out;
}

std::optional<CalcString> decode_history(const CodeSet& x) {
  struct Raw {
    std::vector<FinFun> prefixes;
    std::optional<Nat> a;
  };
  std::map<Nat, Raw> raw;
  std::map<Nat, std::vector<Nat>> before;  // d -> its predecessors
  std::optional<Nat> value;
  std::vector<Block> blocks;
  for (const auto& c : x) {
    auto [tag, body] = unpair(c);
    if (tag == 0) {
      auto t = untriple(body);
      if (!t) return std::nullopt;
      auto f = fun_of_code((*t)[0]);
      if (!f) return std::nullopt;
      std::optional<Nat> a;
      if ((*t)[1] > 0) a = (*t)[1] - 1;
      auto& r = raw[(*t)[2]];
      if (!r.prefixes.empty() && r.a != a) return std::nullopt;
      r.a = a;
      r.prefixes.push_back(*f);
    } else if (tag == 1) {
      auto [d, e] = unpair(body);
      before[e].push_back(d);
    } else if (tag == 2) {
      if (value) return std::nullopt;
      value = body;
    } else if (tag == 3) {
      auto t = untriple(body);
      if (!t) return std::nullopt;
      blocks.push_back(Block{(*t)[0].convert_to<std::size_t>(), (*t)[1].convert_to<std::size_t>(),
                             (*t)[2].convert_to<std::size_t>()});
    } else {
      return std::nullopt;
    }
  }
  // the prefixes of each entry are f-bar(0..|f|)
  std::vector<std::pair<std::size_t, Nat>> order;
  std::map<Nat, FinFun> query;
  for (auto& [d, r] : raw) {
    std::sort(r.prefixes.begin(), r.prefixes.end(),
              [](const FinFun& u, const FinFun& v) { return u.length() < v.length(); });
    const FinFun& f = r.prefixes.back();
    if (r.prefixes.size() != f.length() + 1) return std::nullopt;
    for (std::size_t m = 0; m < r.prefixes.size(); ++m)
      if (r.prefixes[m] != f.prefix(m)) return std::nullopt;
    query[d] = f;
    auto it = before.find(d);
    std::size_t k = it == before.end() ? 0 : it->second.size();
    order.emplace_back(k, d);
  }
  for (const auto& [d, preds] : before) {
    if (!raw.count(d)) return std::nullopt;
    for (const auto& p : preds)
      if (!raw.count(p)) return std::nullopt;
  }
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].first != i) return std::nullopt;
    // predecessors must be exactly the earlier entries
    auto it = before.find(order[i].second);
    if (i > 0) {
      std::vector<Nat> want;
      for (std::size_t j = 0; j < i; ++j) want.push_back(order[j].second);
      std::vector<Nat> got = it->second;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want != got) return std::nullopt;
    }
  }
  CalcString s;
  for (const auto& [k, d] : order) s.entries.push_back(QEntry{query[d], raw[d].a, d});
  s.value = value;
  std::sort(blocks.begin(), blocks.end());
  s.blocks = std::move(blocks);
  return s;
}

HistoryStep gamma_of(const ProcedureFamily& fam, const Type2Oracle& f) {
  return [&fam, f](const CodeSet& x) -> std::optional<CodeSet> {
    Context ctx{fam, f, 0, 0, {}};
    auto r = step(ctx, x);
    return r ? *r : x;
  };
}

CodeSet honest_history(const ProcedureFamily& fam, const Type2Oracle& f, std::size_t max_stages) {
  auto gamma = gamma_of(fam, f);
  auto t = iterate_sets(CodeSet{}, gamma, max_stages);
  return t.stages.back();
}

}  // namespace indcalc
