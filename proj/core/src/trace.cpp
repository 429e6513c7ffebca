#include "indcalc/trace.hpp"

namespace indcalc {

Trace moschovakis_trace(const Index& e, const Env& env, std::size_t max_frames, std::uint64_t child_budget) {
  Comp cur{e, env};
  {
    auto r = eval_p(e, env, child_budget);
    if (r.ok()) throw terminates_error(r.value);
  }
  Trace t;
  while (t.frames.size() < max_frames) {
    TraceFrame frame{cur, {}, std::nullopt};
    Unfold u(cur, Mode::partial);
    std::optional<Comp> next;
    for (;;) {
      auto s = u.next();
      if (!s.need) {
        // every child settled, so the failure is local to this frame
        frame.local = s.result;
        break;
      }
      auto r = eval_p(s.child.e, s.child.env, child_budget);
      if (!r.ok()) {
        next = s.child;
        break;
      }
      frame.left.emplace_back(s.child, r.value);
      u.feed(r);
    }
    t.frames.push_back(std::move(frame));
    if (!next) {
      // a local value means the child only looked unsettled because of the step budget
      t.definite = !t.frames.back().local->ok();
      break;
    }
    cur = std::move(*next);
  }
  return t;
}

}  // namespace indcalc
