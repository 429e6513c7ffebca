#pragma once
#include "indcalc/finset.hpp"
#include "indcalc/kindex.hpp"
#include "indcalc/oracle.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace indcalc {

enum class Mode { partial, total };

// loop: an exact repetition of a configuration on the active call chain, a definite divergence
enum class Outcome { value, not_an_index, oracle_undefined, partial_induction, budget_exceeded, totality_violation, loop };

const char* outcome_name(Outcome o);

struct CompResult {
  Outcome kind = Outcome::value;
  Nat value;
  std::string site;
  std::size_t stage = 0;

  bool ok() const { return kind == Outcome::value; }
  static CompResult of(Nat v) { return CompResult{Outcome::value, std::move(v), {}, 0}; }
  static CompResult fail(Outcome k, std::string site, std::size_t stage = 0) {
    return CompResult{k, 0, std::move(site), stage};
  }
  bool operator==(const CompResult& o) const {
    return kind == o.kind && value == o.value && site == o.site && stage == o.stage;
  }
};

struct Env {
  std::vector<Type2Oracle> oracles;
  std::vector<FinFun> funs;
  std::vector<Nat> nums;
  std::size_t n = 0;

  bool operator==(const Env& o) const;
  std::size_t hash() const;
};

struct Comp {
  Index e;
  Env env;
  bool operator==(const Comp& o) const { return e == o.e && env == o.env; }
};

struct InductionRecord {
  Nat b;
  std::vector<FinSet> stages;               // f_0 .. f_alpha
  std::vector<std::vector<Nat>> answers;    // answers[beta][c] = G(c^f_beta)
};

// one scheme dispatch, driven by the values of its immediate subcomputations
class Unfold {
 public:
  struct Step {
    bool need = false;
    Comp child;          // when need
    CompResult result;   // when done
  };

  Unfold(Comp c, Mode mode);
  Step next();
  void feed(const CompResult& r);

  const Comp& comp() const { return c_; }
  std::uint64_t oracle_calls() const { return oracle_calls_; }
  const std::optional<FinFun>& query() const { return query_; }
  const std::optional<Nat>& answer() const { return answer_; }
  const std::optional<InductionRecord>& induction() const { return ind_; }
  std::size_t sweep_children() const { return sweep_count_; }

 private:
  void finish(CompResult r) { done_ = true; result_ = std::move(r); }
  Comp child_env_with_head(const Index& e, const Nat& head) const;
  Comp induction_child(std::size_t c, const FinSet& f) const;
  void advance_induction();
  void close_induction();

  Comp c_;
  Mode mode_;
  bool done_ = false;
  CompResult result_;
  int phase_ = 0;
  std::vector<Nat> vals_;
  std::uint64_t oracle_calls_ = 0;
  std::optional<FinFun> query_;
  std::optional<Nat> answer_;
  std::optional<InductionRecord> ind_;
  // induction cursor
  FinSet cur_, next_;
  std::size_t c_pos_ = 0;
  std::size_t sweep_count_ = 0;
  std::uint64_t sweep_mask_ = 0;
  std::vector<std::vector<Nat>> sweep_table_;
};

struct CompNode {
  Comp comp;
  CompResult result;
  std::vector<std::unique_ptr<CompNode>> children;  // scheme order
  std::size_t norm = 0;
  std::optional<FinFun> query;                      // S8.2
  std::optional<Nat> answer;                        // S8.2
  std::optional<InductionRecord> induction;         // S8.3, S8.3H
  std::size_t sweep_children = 0;                   // S8.3 under total semantics
};

struct EvalOptions {
  Mode mode = Mode::partial;
  std::uint64_t budget = 1'000'000;
  bool detect_loops = true;
};

class Evaluator {
 public:
  explicit Evaluator(EvalOptions opt) : opt_(opt) {}
  CompResult eval(const Comp& c);
  // the full computation tree with norms filled in
  std::unique_ptr<CompNode> eval_tree(const Comp& c);
  std::uint64_t steps() const { return steps_; }

 private:
  CompResult run(const Comp& c, CompNode* root);
  EvalOptions opt_;
  std::uint64_t steps_ = 0;
};

CompResult eval_p(const Index& e, const Env& env, std::uint64_t budget);
CompResult eval_t(const Index& e, const Env& env, std::uint64_t budget);

struct nontermination_error : std::runtime_error {
  CompResult result;
  explicit nontermination_error(CompResult r)
      : std::runtime_error(std::string("computation does not terminate: ") + outcome_name(r.kind) +
                           (r.site.empty() ? "" : " (" + r.site + ")")),
        result(std::move(r)) {}
};

inline constexpr std::uint64_t default_budget = 1'000'000;

// throws nontermination_error unless eval_p gives a value within the budget
std::size_t norm(const Index& e, const Env& env, std::uint64_t budget = default_budget);
std::unique_ptr<CompNode> computation_tree(const Index& e, const Env& env, std::uint64_t budget = default_budget);

}  // namespace indcalc
