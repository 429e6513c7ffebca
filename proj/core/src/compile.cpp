#include "indcalc/compile.hpp"

#include "indcalc/induction.hpp"
#include "indcalc/seqcode.hpp"

#include <algorithm>

namespace indcalc {

namespace {

struct Piece {
  std::vector<QEntry> entries;
  std::vector<Block> blocks;  // levels >= 1 only
};

std::optional<Nat> tag(const Nat& head, const std::optional<Nat>& d) {
  if (!d) return std::nullopt;
  return pair(head, *d);
}

void append(Piece& out, Piece&& part, const Nat& head, std::size_t level_shift) {
  std::size_t off = out.entries.size();
  for (auto& q : part.entries) {
    q.denotation = tag(head, q.denotation);
    out.entries.push_back(std::move(q));
  }
  for (auto b : part.blocks) out.blocks.push_back(Block{b.start + off, b.end + off, b.level + level_shift});
}

Piece piece_of(const CompNode& node) {
  Piece out;
  const auto& e = *node.comp.e;
  switch (e.scheme) {
    case Scheme::s4:
      for (std::size_t i = 0; i < node.children.size(); ++i) append(out, piece_of(*node.children[i]), Nat(i), 0);
      break;
    case Scheme::s6:
    case Scheme::s9:
      if (!node.children.empty()) out = piece_of(*node.children[0]);
      break;
    case Scheme::s8_2:
      for (std::size_t c = 0; c < node.children.size(); ++c) append(out, piece_of(*node.children[c]), Nat(c + 1), 0);
      if (node.query && node.answer) out.entries.push_back(QEntry{*node.query, *node.answer, pair(0, 0)});
      break;
    case Scheme::s8_3:
    case Scheme::s8_3h: {
      if (!node.induction) break;
      const auto& ind = *node.induction;
      const std::size_t n = node.comp.env.n;
      if (n == 0) break;
      bool closed = node.result.ok();
      auto d1 = i_denotations(ind.stages, n, closed);
      std::size_t stage_start = 0;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        std::size_t beta = i / n, a = i % n;
        if (a == 0) stage_start = out.entries.size();
        out.entries.push_back(QEntry{stage_query(a, ind.stages.at(beta)), std::nullopt,
                                     d1[i] ? std::optional<Nat>(pair(*d1[i], Nat(0))) : std::nullopt});
        Piece sub = piece_of(*node.children[i]);
        for (auto& q : sub.entries)
          if (q.denotation) q.denotation = *q.denotation + 1;
        if (d1[i]) {
          append(out, std::move(sub), *d1[i], 1);
        } else {
          std::size_t off = out.entries.size();
          for (auto& q : sub.entries) {
            q.denotation.reset();
            out.entries.push_back(std::move(q));
          }
          for (auto b : sub.blocks) out.blocks.push_back(Block{b.start + off, b.end + off, b.level + 1});
        }
        if (a + 1 == n || i + 1 == node.children.size())
          out.blocks.push_back(Block{stage_start, out.entries.size(), 1});
      }
      break;
    }
    default:
      break;
  }
  return out;
}

CalcString finish(Piece p, std::optional<Nat> value) {
  CalcString s;
  s.entries = std::move(p.entries);
  s.blocks.push_back(Block{0, s.entries.size(), 0});
  for (auto& b : p.blocks) s.blocks.push_back(b);
  std::sort(s.blocks.begin(), s.blocks.end());
  s.value = std::move(value);
  return s;
}

Env with_oracle(Env env, const Type2Oracle& f) {
  env.oracles = {f};
  return env;
}

}  // namespace

FinFun stage_query(std::size_t a, const FinSet& f) { return FinFun::characteristic(f).cons(a); }

std::vector<std::optional<Nat>> i_denotations(const std::vector<FinSet>& stages, std::size_t n, bool closed) {
  std::vector<std::optional<Nat>> out;
  for (std::size_t beta = 0; beta < stages.size(); ++beta) {
    std::optional<Nat> head;
    if (beta + 1 < stages.size()) {
      std::size_t x = stages[beta + 1].minus(stages[beta]).min();
      head = Nat(x + 1);
    } else if (closed) {
      head = Nat(0);
    }
    for (std::size_t a = 0; a < n; ++a) out.push_back(head ? std::optional<Nat>(pair(*head, Nat(a))) : std::nullopt);
  }
  return out;
}

CalcString i_procedure_calc(const Type2Oracle& g, const Nat& b, std::optional<std::size_t> n_opt) {
  const std::size_t n = n_opt ? *n_opt : (g.support() == 0 ? 0 : g.support() - 1);
  if (n > FinSet::max_base) throw std::invalid_argument("i_procedure_calc: base above 64");
  std::vector<FinSet> stages{FinSet(n)};
  std::vector<Nat> answers;
  for (;;) {
    const FinSet& cur = stages.back();
    FinSet next(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto v = g.apply(stage_query(a, cur));
      if (!v) throw partiality_error(stages.size() - 1);
      answers.push_back(*v);
      if (*v >= 1) next = next.with(a);
    }
    if (next.subset_of(cur)) break;
    stages.push_back(cur.unite(next));
  }
  auto d = i_denotations(stages, n, true);
  CalcString s;
  for (std::size_t i = 0; i < answers.size(); ++i)
    s.entries.push_back(QEntry{stage_query(i % n, stages[i / n]), answers[i], d[i]});
  s.blocks.push_back(Block{0, s.entries.size(), 0});
  if (n > 0)
    for (std::size_t beta = 0; beta < stages.size(); ++beta) s.blocks.push_back(Block{beta * n, (beta + 1) * n, 1});
  std::sort(s.blocks.begin(), s.blocks.end());
  auto bi = to_index(b, n);
  s.value = Nat(bi && stages.back().contains(*bi) ? 1 : 0);
  return s;
}

CalcString compile_node(const CompNode& root) {
  if (!root.result.ok()) throw nontermination_error(root.result);
  return finish(piece_of(root), root.result.value);
}

CalcString compile_computation(const Index& e, const Env& env, const Type2Oracle& f, std::uint64_t budget) {
  auto tree = computation_tree(e, with_oracle(env, f), budget);
  return compile_node(*tree);
}

CalcString compile_prefix(const Index& e, const Env& env, const Type2Oracle& f, std::uint64_t budget) {
  Evaluator ev({Mode::partial, budget, true});
  auto tree = ev.eval_tree(Comp{e, with_oracle(env, f)});
  std::optional<Nat> value;
  if (tree->result.ok()) value = tree->result.value;
  return finish(piece_of(*tree), value);
}

}  // namespace indcalc
