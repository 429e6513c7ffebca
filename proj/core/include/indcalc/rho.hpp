#pragma once
#include "indcalc/kindex.hpp"

namespace indcalc {

// rewrites every S8.3 into S8.3H so that total semantics only ever applies the
// induction functional to the total H built from the trajectory
Index translate_p_to_t(const Index& e);

}  // namespace indcalc
