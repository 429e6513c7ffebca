#pragma once
#include "indcalc/finfun.hpp"
#include "indcalc/nat.hpp"
#include "indcalc/oracle.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace indcalc {

// (f, a, d); a == nullopt is the LOG mark *
struct QEntry {
  FinFun query;
  std::optional<Nat> answer;
  std::optional<Nat> denotation;

  bool star() const { return !answer; }
  bool operator==(const QEntry&) const = default;
};

// positions [start, end); level 0 is the whole string
struct Block {
  std::size_t start = 0, end = 0, level = 0;
  auto operator<=>(const Block&) const = default;
};

struct CalcString {
  std::vector<QEntry> entries;
  std::optional<Nat> value;
  std::vector<Block> blocks;

  std::size_t size() const { return entries.size(); }
  bool operator==(const CalcString&) const = default;
};

// queries are compared as functions extended by zeros
bool same_query(const FinFun& f, const FinFun& g);
// query and answer agree
bool same_move(const QEntry& x, const QEntry& y);

bool matches(const CalcString& s, const Type2Oracle& f);

// indices of the first offending pair, or nullopt when the family is branching consistent
std::optional<std::pair<std::size_t, std::size_t>> consistency_check(const std::vector<CalcString>& family);

// a repeated query with two different answers inside one string
std::optional<std::pair<std::size_t, std::size_t>> self_conflict(const CalcString& s);

// empty when denotations are distinct and the blocks are nested, cover the string and
// are determined by (start, end, level)
std::string structure_error(const CalcString& s);

// number of blocks containing a position, maximized over positions >= from;
// the whole string counts, so an unblocked string gives 1
std::size_t limsup_block_level(const CalcString& s, std::size_t from = 0);

struct Representation {
  std::vector<Nat> chain;  // D listed in its order
  std::map<Nat, std::pair<FinFun, std::optional<Nat>>> entries;
  std::optional<Nat> value;
};

// one (d, f, a) per position, before any well-formedness check
struct FlatEntry {
  Nat d;
  FinFun f;
  std::optional<Nat> a;
};

// errors: missing denotations, or a denotation used twice
std::variant<Representation, std::string> representation_of(const std::vector<FlatEntry>& flat, std::optional<Nat> value);
std::variant<Representation, std::string> representation_of(const CalcString& s);
// the string with the representation's positions, no blocks
CalcString calc_of(const Representation& r);
std::vector<FlatEntry> flat_of(const CalcString& s);

}  // namespace indcalc
