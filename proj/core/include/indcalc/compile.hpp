#pragma once
#include "indcalc/calc.hpp"
#include "indcalc/eval.hpp"

namespace indcalc {

// denotations of the I-procedure at (stage, a), stage-major; the last stage gets <0,a>
// only when closed is set, otherwise it stays open (nullopt)
std::vector<std::optional<Nat>> i_denotations(const std::vector<FinSet>& stages, std::size_t n, bool closed);

// a^f as a query of length n+1
FinFun stage_query(std::size_t a, const FinSet& f);

// the calculation of lambda G. I(F_G)(b) matching G, over base n (default support-1);
// throws partiality_error when G is undefined on the trajectory
CalcString i_procedure_calc(const Type2Oracle& g, const Nat& b, std::optional<std::size_t> n = std::nullopt);

// the calculation of a terminating computation tree
CalcString compile_node(const CompNode& root);

// env.oracles is replaced by F; throws nontermination_error unless eval_p terminates
CalcString compile_computation(const Index& e, const Env& env, const Type2Oracle& f,
                               std::uint64_t budget = default_budget);

// the calculation built so far when the computation is cut (or fails); open stages carry no
// denotations and open blocks end with the string
CalcString compile_prefix(const Index& e, const Env& env, const Type2Oracle& f, std::uint64_t budget);

}  // namespace indcalc
