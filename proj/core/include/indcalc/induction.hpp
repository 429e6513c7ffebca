#pragma once
#include "indcalc/finorder.hpp"
#include "indcalc/nat.hpp"
#include "indcalc/step_functional.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace indcalc {

struct partiality_error : std::runtime_error {
  std::size_t stage;
  explicit partiality_error(std::size_t s)
      : std::runtime_error("induction undefined at stage " + std::to_string(s)), stage(s) {}
};

struct productivity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndTrace {
  std::vector<FinSet> stages;   // f_0 .. f_alpha
  std::vector<FinSet> applied;  // F(f_0) .. F(f_{alpha-1}), plus F(f_alpha) when closed
  bool closed = false;
  std::optional<std::size_t> error_stage;

  std::size_t alpha() const { return stages.size() - 1; }
  const FinSet& last() const { return stages.back(); }
};

IndTrace iterate(const StepFunctional& f);
FinSet lfp(const StepFunctional& f);
// least fixed point of A -> A u {G(A)}
FinSet i0(const PointFunctional& g);

// x <= y iff both are in the fixed point and x enters no later than y
FinOrder stage_order(const IndTrace& trace);

// sets of codes over an unbounded universe
using CodeSet = std::set<Nat>;

inline CodeSet unite(const CodeSet& a, const CodeSet& b) {
  CodeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}
inline bool subset_of(const CodeSet& a, const CodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline FinSet unite(const FinSet& a, const FinSet& b) { return a.unite(b); }
inline bool subset_of(const FinSet& a, const FinSet& b) { return a.subset_of(b); }

template <class Set>
struct Trajectory {
  std::vector<Set> stages;
  bool closed = false;
  std::optional<std::size_t> error_stage;
};

// f_{b+1} = f_b u F(f_b) until F(f_a) is inside f_a; step returns nullopt when undefined
template <class Set, class Step>
Trajectory<Set> iterate_sets(Set start, Step&& step, std::size_t max_stages) {
  Trajectory<Set> t;
  t.stages.push_back(std::move(start));
  for (std::size_t s = 0; s <= max_stages; ++s) {
    const Set& cur = t.stages.back();
    std::optional<Set> next = step(cur);
    if (!next) {
      t.error_stage = t.stages.size() - 1;
      return t;
    }
    if (subset_of(*next, cur)) {
      t.closed = true;
      return t;
    }
    t.stages.push_back(unite(cur, *next));
  }
  throw std::runtime_error("iterate_sets: no closure within the stage cap");
}

}  // namespace indcalc
