#include "indcalc/calc.hpp"

#include <algorithm>
#include <set>

namespace indcalc {

bool same_query(const FinFun& f, const FinFun& g) {
  std::size_t n = std::max(f.length(), g.length());
  for (std::size_t i = 0; i < n; ++i)
    if (f.at(i) != g.at(i)) return false;
  return true;
}

bool same_move(const QEntry& x, const QEntry& y) { return x.answer == y.answer && same_query(x.query, y.query); }

bool matches(const CalcString& s, const Type2Oracle& f) {
  for (const auto& q : s.entries) {
    if (q.star()) continue;
    auto v = f.apply(q.query);
    if (!v || *v != *q.answer) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> consistency_check(const std::vector<CalcString>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& s = family[i].entries;
      const auto& t = family[j].entries;
      std::size_t m = std::min(s.size(), t.size());
      std::size_t k = 0;
      while (k < m && same_move(s[k], t[k])) ++k;
      if (k == m) {
        // one is a prefix of the other: only equal strings with equal values are allowed
        if (s.size() != t.size() || family[i].value != family[j].value) return std::pair{i, j};
        continue;
      }
      if (!same_query(s[k].query, t[k].query) || s[k].star() || t[k].star()) return std::pair{i, j};
    }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> self_conflict(const CalcString& s) {
  for (std::size_t i = 0; i < s.entries.size(); ++i)
    for (std::size_t j = i + 1; j < s.entries.size(); ++j) {
      const auto& x = s.entries[i];
      const auto& y = s.entries[j];
      if (!x.star() && !y.star() && x.answer != y.answer && same_query(x.query, y.query)) return std::pair{i, j};
    }
  return std::nullopt;
}

std::string structure_error(const CalcString& s) {
  std::set<Nat> seen;
  for (const auto& q : s.entries)
    if (q.denotation && !seen.insert(*q.denotation).second) return "denotation " + q.denotation->str() + " repeats";
  bool whole = false;
  for (const auto& b : s.blocks) {
    if (b.start > b.end || b.end > s.size()) return "block outside the string";
    if (b.level == 0) {
      if (b.start != 0 || b.end != s.size()) return "level 0 block is not the whole string";
      whole = true;
    }
  }
  if (!whole) return "no whole-string block";
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < s.blocks.size(); ++j) {
      const auto& a = s.blocks[i];
      const auto& b = s.blocks[j];
      if (a == b) return "block listed twice";
      bool disjoint = a.end <= b.start || b.end <= a.start;
      bool a_in_b = b.start <= a.start && a.end <= b.end;
      bool b_in_a = a.start <= b.start && b.end <= a.end;
      if (!disjoint && !a_in_b && !b_in_a) return "blocks overlap without nesting";
      // strictly nested blocks carry strictly larger levels
      if (a_in_b && !b_in_a && a.level <= b.level) return "inner block without a higher level";
      if (b_in_a && !a_in_b && b.level <= a.level) return "inner block without a higher level";
    }
  return {};
}

std::size_t limsup_block_level(const CalcString& s, std::size_t from) {
  std::size_t best = 1;
  for (std::size_t p = from; p < s.size(); ++p) {
    std::size_t depth = 0;
    bool whole = false;
    for (const auto& b : s.blocks) {
      if (b.start <= p && p < b.end) ++depth;
      if (b.level == 0) whole = true;
    }
    if (!whole) ++depth;
    best = std::max(best, depth);
  }
  return best;
}

std::variant<Representation, std::string> representation_of(const std::vector<FlatEntry>& flat,
                                                             std::optional<Nat> value) {
  Representation r;
  r.value = std::move(value);
  for (const auto& e : flat) {
    if (!r.entries.emplace(e.d, std::pair{e.f, e.a}).second) return "denotation " + e.d.str() + " used twice";
    r.chain.push_back(e.d);
  }
  return r;
}

std::vector<FlatEntry> flat_of(const CalcString& s) {
  std::vector<FlatEntry> out;
  for (const auto& q : s.entries) out.push_back(FlatEntry{q.denotation.value_or(Nat(-1)), q.query, q.answer});
  return out;
}

std::variant<Representation, std::string> representation_of(const CalcString& s) {
  for (const auto& q : s.entries)
    if (!q.denotation) return std::string("entry without a denotation");
  return representation_of(flat_of(s), s.value);
}

CalcString calc_of(const Representation& r) {
  CalcString s;
  for (const auto& d : r.chain) {
    const auto& [f, a] = r.entries.at(d);
    s.entries.push_back(QEntry{f, a, d});
  }
  s.value = r.value;
  return s;
}

}  // namespace indcalc
