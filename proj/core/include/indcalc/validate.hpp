#pragma once
#include "indcalc/calc.hpp"
#include "indcalc/eval.hpp"

#include <cstdint>
#include <variant>

namespace indcalc {

struct Accept {
  Nat value;
};
struct Reject {
  std::string reason;
};
using Verdict = std::variant<Accept, Reject>;

inline bool accepted(const Verdict& v) { return std::holds_alternative<Accept>(v); }

// checks that the representation is the calculation of {e}(F, env) for any F it matches,
// reading every oracle answer off the string itself; env's oracles are ignored
Verdict validate_representation(const Index& e, const Env& env, const Representation& r,
                                 std::uint64_t budget = default_budget);
// the flat form may carry repeated denotations, rejected up front
Verdict validate_flat(const Index& e, const Env& env, const std::vector<FlatEntry>& flat,
                      const std::optional<Nat>& value, std::uint64_t budget = default_budget);

struct Mutation {
  std::string kind;
  std::vector<FlatEntry> flat;
  std::optional<Nat> value;
};

// single edits of one entry or one denotation; answer values are left alone since a changed
// answer can be the calculation for another oracle
std::vector<Mutation> mutations(const CalcString& s, std::size_t count, std::uint64_t seed);

}  // namespace indcalc
