#include "indcalc/induction.hpp"

namespace indcalc {

IndTrace iterate(const StepFunctional& f) {
  IndTrace t;
  t.stages.push_back(FinSet(f.base_size()));
  for (;;) {
    const FinSet cur = t.stages.back();
    auto next = f.apply(cur);
    if (!next) {
      t.error_stage = t.stages.size() - 1;
      return t;
    }
    t.applied.push_back(*next);
    if (next->subset_of(cur)) {
      t.closed = true;
      return t;
    }
    t.stages.push_back(cur.unite(*next));
  }
}

FinSet lfp(const StepFunctional& f) {
  auto t = iterate(f);
  if (!t.closed) throw partiality_error(*t.error_stage);
  return t.last();
}

FinSet i0(const PointFunctional& g) {
  FinSet a(g.base_size());
  for (;;) {
    std::size_t x = g.apply(a);
    if (a.contains(x)) return a;
    if (x >= a.base_size())
      throw productivity_error("G returned " + std::to_string(x) + " outside base " + std::to_string(a.base_size()) +
                               " before closure");
    a = a.with(x);
  }
}

FinOrder stage_order(const IndTrace& trace) {
  const FinSet& top = trace.last();
  FinOrder o{top, {}, false};
  auto entry = [&](std::size_t x) {
    std::size_t s = 0;
    while (!trace.stages[s].contains(x)) ++s;
    return s;
  };
  for (auto x : top.members())
    for (auto y : top.members())
      if (entry(x) <= entry(y)) o.pairs.insert({x, y});
  return o;
}

}  // namespace indcalc
