#pragma once
#include "indcalc/family.hpp"
#include "indcalc/induction.hpp"

#include <functional>

namespace indcalc {

// codes over N:
//   <0, <f-bar(m), a+1 or 0 for *, d>>  for m <= |f|, one entry
//   <1, <d, d'>>                         d before d'
//   <2, c>                               the value
//   <3, <start, end, level>>             a closed block
using HistoryStep = std::function<std::optional<CodeSet>(const CodeSet&)>;

// Gamma_F: extends a code of a prefix of the family by the next entry, or by a whole block
// worked out in a nested induction; codes of non-prefixes and of complete calculations are fixed
HistoryStep gamma_of(const ProcedureFamily& fam, const Type2Oracle& f);

// lfp of Gamma_F
CodeSet honest_history(const ProcedureFamily& fam, const Type2Oracle& f, std::size_t max_stages = 1u << 20);

// nullopt when the set does not code a string
std::optional<CalcString> decode_history(const CodeSet& x);

CodeSet encode_entry(const QEntry& q);

}  // namespace indcalc
