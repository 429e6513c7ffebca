#include "indcalc/family.hpp"

#include "indcalc/compile.hpp"
#include "indcalc/induction.hpp"

#include <algorithm>

namespace indcalc {

std::vector<Type2Oracle> oracle_tables(std::size_t support, std::size_t range, const std::vector<Nat>& alphabet) {
  std::vector<Type2Oracle> out;
  for (const auto& t : Type2Oracle::all_tables(support, range, alphabet.size())) {
    std::vector<std::optional<Nat>> cells;
    for (const auto& v : t.table()) cells.push_back(alphabet.at(v->convert_to<std::size_t>()));
    out.emplace_back(support, range, std::move(cells));
  }
  return out;
}

ProcedureFamily compiled_family(const Index& e, const Env& env, const std::vector<Type2Oracle>& oracles,
                                std::uint64_t budget) {
  ProcedureFamily fam;
  for (const auto& f : oracles) {
    try {
      fam.members.push_back(compile_computation(e, env, f, budget));
      fam.sources.push_back(f);
    } catch (const nontermination_error&) {
    }
  }
  return fam;
}

ProcedureFamily i_procedure_family(const std::vector<Type2Oracle>& gs, const Nat& b, std::optional<std::size_t> n) {
  ProcedureFamily fam;
  for (const auto& g : gs) {
    try {
      fam.members.push_back(i_procedure_calc(g, b, n));
      fam.sources.push_back(g);
    } catch (const partiality_error&) {
    }
  }
  return fam;
}

namespace {

bool extends(const CalcString& m, const std::vector<QEntry>& prefix) {
  if (m.entries.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!same_move(m.entries[i], prefix[i])) return false;
  return true;
}

std::vector<OpenBlock> containing(const CalcString& m, std::size_t p) {
  std::vector<OpenBlock> out;
  for (const auto& b : m.blocks)
    if (b.level >= 1 && b.start <= p && p < b.end) out.push_back(OpenBlock{b.start, b.level});
  std::sort(out.begin(), out.end(), [](const OpenBlock& x, const OpenBlock& y) { return x.level < y.level; });
  return out;
}

std::vector<std::size_t> nonempty(const ProcedureFamily& fam, const std::vector<QEntry>& prefix) {
  auto ids = consistent_members(fam, prefix);
  if (ids.empty()) throw prefix_error("prefix of length " + std::to_string(prefix.size()) + " is not in the family");
  return ids;
}

const Block* find_block(const CalcString& m, const OpenBlock& b) {
  for (const auto& x : m.blocks)
    if (x.start == b.start && x.level == b.level) return &x;
  return nullptr;
}

}  // namespace

std::vector<std::size_t> consistent_members(const ProcedureFamily& fam, const std::vector<QEntry>& prefix) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    if (extends(fam.members[i], prefix)) out.push_back(i);
  return out;
}

NextStep next_of(const ProcedureFamily& fam, const std::vector<QEntry>& prefix) {
  auto ids = nonempty(fam, prefix);
  const std::size_t p = prefix.size();
  std::optional<NextStep> out;
  for (auto i : ids) {
    const auto& m = fam.members[i];
    NextStep s;
    if (m.entries.size() == p) {
      s.final = true;
      s.value = m.value.value_or(Nat(0));
    } else {
      s.query = m.entries[p].query;
      s.log = m.entries[p].star();
    }
    if (!out) {
      out = s;
      continue;
    }
    bool same = out->final == s.final &&
                (s.final ? out->value == s.value : (out->log == s.log && same_query(out->query, s.query)));
    if (!same) throw tameness_error("members consistent with the prefix disagree on the next step");
  }
  return *out;
}

std::size_t delay_at(const ProcedureFamily& fam, const CalcString& calc, std::size_t beta) {
  if (beta >= calc.size()) throw std::out_of_range("delay_at: position outside the calculation");
  const std::size_t len = calc.size();
  for (std::size_t gamma = 0; beta + gamma <= len; ++gamma) {
    bool forced = true;
    for (const auto& other : fam.members) {
      if (other.entries.size() <= beta) continue;
      std::size_t agree = std::min(beta + gamma, other.entries.size());
      bool same = other.entries.size() >= beta + gamma;
      for (std::size_t k = 0; same && k < agree; ++k) same = same_move(calc.entries[k], other.entries[k]);
      if (!same) continue;
      for (std::size_t k = 0; k <= beta; ++k)
        if (calc.entries[k].denotation != other.entries[k].denotation) {
          forced = false;
          break;
        }
      if (!forced) break;
    }
    if (forced) return gamma;
  }
  return len - beta;
}

std::vector<OpenBlock> open_blocks(const ProcedureFamily& fam, const std::vector<QEntry>& prefix) {
  auto ids = nonempty(fam, prefix);
  const std::size_t p = prefix.size();
  std::optional<std::vector<OpenBlock>> out;
  for (auto i : ids) {
    const auto& m = fam.members[i];
    if (m.entries.size() == p) continue;
    auto here = containing(m, p);
    if (!out) out = here;
    else if (*out != here) throw tameness_error("block structure at position " + std::to_string(p) + " is not decided");
  }
  return out.value_or(std::vector<OpenBlock>{});
}

bool block_closes(const ProcedureFamily& fam, const std::vector<QEntry>& prefix, const OpenBlock& b) {
  auto ids = nonempty(fam, prefix);
  std::optional<bool> out;
  for (auto i : ids) {
    const Block* x = find_block(fam.members[i], b);
    if (!x) throw tameness_error("block at " + std::to_string(b.start) + " missing from a consistent member");
    bool here = x->end == prefix.size();
    if (!out) out = here;
    else if (*out != here) throw tameness_error("end of block at " + std::to_string(b.start) + " is not decided");
  }
  return *out;
}

Nat denote(const ProcedureFamily& fam, const std::vector<QEntry>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("denote: empty prefix");
  const std::size_t p = prefix.size() - 1;
  std::vector<QEntry> before(prefix.begin(), prefix.end() - 1);
  auto open = open_blocks(fam, before);
  if (!open.empty()) return Nat(p - open.back().start);
  auto ids = nonempty(fam, prefix);
  std::optional<Nat> out;
  for (auto i : ids) {
    const auto& d = fam.members[i].entries[p].denotation;
    if (!d) throw tameness_error("member without a denotation");
    if (!out) out = *d;
    else if (*out != *d) throw tameness_error("denotation at " + std::to_string(p) + " outside blocks has a delay");
  }
  return *out;
}

std::vector<Nat> redenote(const ProcedureFamily& fam, const std::vector<QEntry>& prefix, const OpenBlock& b) {
  auto ids = nonempty(fam, prefix);
  const auto& rep = fam.members[ids.front()];
  // the enclosing block one level up
  std::optional<OpenBlock> up;
  for (const auto& x : rep.blocks)
    if (x.level + 1 == b.level && x.start <= b.start && prefix.size() <= x.end) up = OpenBlock{x.start, x.level};
  if (!up || up->level == 0) {
    std::vector<Nat> out;
    for (std::size_t p = b.start; p < prefix.size(); ++p) {
      std::optional<Nat> d;
      for (auto i : ids) {
        const auto& here = fam.members[i].entries[p].denotation;
        if (!here) throw tameness_error("member without a denotation");
        if (!d) d = *here;
        else if (*d != *here) throw tameness_error("denotations of a closed block are not decided");
      }
      out.push_back(*d);
    }
    return out;
  }
  std::vector<Nat> out;
  for (std::size_t p = b.start; p < prefix.size(); ++p) out.push_back(Nat(p - up->start));
  return out;
}

}  // namespace indcalc
