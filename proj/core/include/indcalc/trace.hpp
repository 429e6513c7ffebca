#pragma once
#include "indcalc/eval.hpp"

namespace indcalc {

struct TraceFrame {
  Comp comp;
  // immediate subcomputations left of the descent, each with its value
  std::vector<std::pair<Comp, Nat>> left;
  // the frame fails by itself (no index, arity, oracle undefined): the chain ends here
  std::optional<CompResult> local;
};

struct Trace {
  std::vector<TraceFrame> frames;
  // a frame failed locally; otherwise the chain was cut at the frame budget
  bool definite = false;
};

struct terminates_error : std::runtime_error {
  Nat value;
  explicit terminates_error(Nat v) : std::runtime_error("computation terminates with value " + v.str()), value(std::move(v)) {}
};

// leftmost chain of unsettled subcomputations, at most max_frames long; a child counts as
// settled when it returns a value within child_budget steps
Trace moschovakis_trace(const Index& e, const Env& env, std::size_t max_frames,
                        std::uint64_t child_budget = 100'000);

}  // namespace indcalc
