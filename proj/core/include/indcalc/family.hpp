#pragma once
#include "indcalc/calc.hpp"
#include "indcalc/eval.hpp"

#include <stdexcept>

namespace indcalc {

// an explicit finite procedure together with the oracles its members were produced from
struct ProcedureFamily {
  std::vector<CalcString> members;
  std::vector<Type2Oracle> sources;
};

// every table of the given support and range with values from the alphabet
std::vector<Type2Oracle> oracle_tables(std::size_t support, std::size_t range, const std::vector<Nat>& alphabet);

// members for the oracles on which the computation terminates
ProcedureFamily compiled_family(const Index& e, const Env& env, const std::vector<Type2Oracle>& oracles,
                                std::uint64_t budget = default_budget);
// I-procedure calculations for the oracles on which the induction closes
ProcedureFamily i_procedure_family(const std::vector<Type2Oracle>& gs, const Nat& b,
                                   std::optional<std::size_t> n = std::nullopt);

struct prefix_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// members consistent with a prefix disagree on something the prefix should decide
struct tameness_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NextStep {
  bool final = false;
  FinFun query;  // when !final
  bool log = false;
  Nat value;     // when final
};

// members whose first prefix.size() moves are the prefix (denotations ignored)
std::vector<std::size_t> consistent_members(const ProcedureFamily& fam, const std::vector<QEntry>& prefix);

// throws prefix_error outside the prefixes of the family
NextStep next_of(const ProcedureFamily& fam, const std::vector<QEntry>& prefix);

// brute force over the family
std::size_t delay_at(const ProcedureFamily& fam, const CalcString& calc, std::size_t beta);

struct OpenBlock {
  std::size_t start = 0, level = 0;
  auto operator<=>(const OpenBlock&) const = default;
};

// blocks of level >= 1 containing the next position, outermost first
std::vector<OpenBlock> open_blocks(const ProcedureFamily& fam, const std::vector<QEntry>& prefix);
// whether the block at (start, level) ends right after the prefix
bool block_closes(const ProcedureFamily& fam, const std::vector<QEntry>& prefix, const OpenBlock& b);
// the denotation of the last entry of prefix: the true one outside blocks, otherwise its
// offset from the start of the innermost block
Nat denote(const ProcedureFamily& fam, const std::vector<QEntry>& prefix);
// on closing b (prefix ends at its end): denotations of its positions in the enclosing
// block's terms, true ones when that is the whole string
std::vector<Nat> redenote(const ProcedureFamily& fam, const std::vector<QEntry>& prefix, const OpenBlock& b);

}  // namespace indcalc
