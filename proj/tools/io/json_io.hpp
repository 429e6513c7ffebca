#pragma once

#include "indcalc/calc.hpp"
#include "indcalc/eval.hpp"
#include "indcalc/finorder.hpp"
#include "indcalc/induction.hpp"
#include "indcalc/realisers.hpp"
#include "indcalc/step_functional.hpp"
#include "indcalc/trace.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace indcalc::io {

using json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

// bad file contents; where is a JSON pointer or a byte offset
struct input_error : std::runtime_error {
  std::string where;
  input_error(std::string at, const std::string& what)
      : std::runtime_error(at + ": " + what), where(std::move(at)) {}
};

json read_file(const std::string& path);
json parse_text(const std::string& text, const std::string& origin);

// numbers or decimal strings in, numbers out when they fit 64 bits
Nat nat_of(const json& j, const std::string& at);
json nat_json(const Nat& x);
std::uint64_t mask_of(const json& j, const std::string& at);

StepFunctional step_functional_of(const json& j);
json step_functional_json(const StepFunctional& f);
json ind_trace_json(const IndTrace& t);

Env env_of(const json& j);
Index index_of(const std::string& text);

json comp_result_json(const CompResult& r);
json trace_json(const Trace& t);

json finorder_json(const FinOrder& o);

json calc_json(const CalcString& s);
// the string in representation order; blocks are dropped
json representation_json(const Representation& r);
Representation representation_of_json(const json& j);

DepthOracle depth_oracle_of(const json& j);
std::string bits_string(const Bits& b);

}  // namespace indcalc::io
