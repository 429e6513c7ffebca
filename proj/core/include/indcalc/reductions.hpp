#pragma once
#include "indcalc/finfun.hpp"
#include "indcalc/induction.hpp"

#include <functional>

namespace indcalc {

// binary sequences of length <= n, numbered by length then value (first bit most significant);
// the empty sequence is 0
class BinarySeqs {
 public:
  explicit BinarySeqs(std::size_t n);
  std::size_t n() const { return n_; }
  std::size_t count() const { return (std::size_t{1} << (n_ + 1)) - 1; }
  std::size_t id(const std::vector<bool>& s) const;
  std::vector<bool> seq(std::size_t id) const;
  Nat code(std::size_t id) const;
  // proper prefixes below extensions, otherwise first difference decides
  bool lex_less(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_;
};

struct SingleValued {
  BinarySeqs seqs;
  PointFunctional g;
  // union of the bits carried by the sequences in b
  FinSet bits(const FinSet& b) const;
};

SingleValued single_valued_of(const StepFunctional& f);

std::pair<FinSet, FinSet> pigeonhole_pair(const PointFunctional& g);

// F_f(A) = {k : f(k) > 0} u {k : k+1 in A}
StepFunctional e2_functional(const FinFun& f);
int e2_via_ind(const FinFun& f);

// a labelled tree over [0..b)^{<=D}; nodes numbered breadth first, root 0
class SuslinTree {
 public:
  SuslinTree(std::size_t b, std::size_t depth, std::vector<std::uint64_t> values);
  SuslinTree(std::size_t b, std::size_t depth, const std::function<std::uint64_t(const std::vector<std::size_t>&)>& label);

  std::size_t branching() const { return b_; }
  std::size_t depth() const { return d_; }
  std::size_t node_count() const { return values_.size(); }
  std::uint64_t value(std::size_t node) const { return values_[node]; }
  std::size_t level(std::size_t node) const;
  std::size_t child(std::size_t node, std::size_t digit) const;
  std::vector<std::size_t> path(std::size_t node) const;
  // value indexed by the sequence code of the node's path
  std::uint64_t value_at_code(const Nat& code) const;

 private:
  std::size_t level_start(std::size_t l) const;
  std::size_t b_, d_;
  std::vector<std::uint64_t> values_;
};

// the zero-labelled subtree T_f: the root plus nodes all of whose nonempty prefixes carry 0
FinSet zero_subtree(const SuslinTree& t);
StepFunctional suslin_functional(const SuslinTree& t);
// 1 iff T_f has a branch of full depth
int suslin_via_ind(const SuslinTree& t);

}  // namespace indcalc
