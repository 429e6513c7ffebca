#pragma once
#include "indcalc/eval.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace indcalc {

// hand-written indices with their environments
struct BatteryItem {
  std::string name;
  Index e;
  Env env;
  // G diverges somewhere off its trajectory
  bool partial_g = false;
  std::optional<Nat> expected;  // eval_p value, when the item terminates
  // the support-2 oracle family the item is compiled over: all tables of this range with
  // values from the alphabet
  std::size_t family_range = 2;
  std::vector<Nat> family_values{0, 1, 2};
};

std::vector<BatteryItem> battery();

// E = <4,<9>,<3>>; E applied to its own code repeats its configuration
Index diagonal();
// <4,E,<2,E>>, diverges on any arguments
Index loop_index();
// <4,<7>,<2,0>>: inside an induction, reads c from c^A
Index read_c();

// oracle on c^A (support n+1, range max(n,2)); other arguments are UNDEFINED
Type2Oracle set_oracle(std::size_t n, const std::function<std::optional<Nat>(std::size_t, const FinSet&)>& g);

// G(c^A, f) = 1 iff f(c) > 0 or c+1 in A; needs the selector oracle below and f in funs
Index e2_program();
Type2Oracle e2_selector();
Env e2_env(const FinFun& f, std::size_t b);

// <4,<9>,<8,2,<7>>>: the oracle answers with the index to run on c^A
Index dispatch_program();

// candidates k < count, converging exactly at the winners
Index gandy_program();
Type2Oracle gandy_oracle(std::size_t count, const std::vector<std::size_t>& winners);

// X = <8,3,D> that re-enters itself from inside its own induction; run it with nums (b, X)
Index nesting_program();

}  // namespace indcalc
