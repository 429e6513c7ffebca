#include "indcalc/eval.hpp"

#include "indcalc/pwo.hpp"

#include <algorithm>
#include <unordered_map>

namespace indcalc {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::value: return "Value";
    case Outcome::not_an_index: return "NotAnIndex";
    case Outcome::oracle_undefined: return "OracleUndefined";
    case Outcome::partial_induction: return "PartialInduction";
    case Outcome::budget_exceeded: return "BudgetExceeded";
    case Outcome::totality_violation: return "TotalityViolation";
    case Outcome::loop: return "Loop";
  }
  return "?";
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

std::size_t nat_hash(const Nat& x) {
  const auto* z = x.backend().data();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) h = mix(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  return h;
}

bool is_permutation_of(const std::vector<std::size_t>& t, std::size_t len) {
  if (t.size() != len) return false;
  std::vector<bool> seen(len, false);
  for (auto x : t) {
    if (x >= len || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

template <class T>
std::vector<T> permuted(const std::vector<T>& xs, const std::vector<std::size_t>& t) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (auto i : t) out.push_back(xs[i]);
  return out;
}

std::string fun_str(const FinFun& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.length(); ++i) s += (i ? "," : "") + std::to_string(f.at(i));
  return s + ")";
}

}  // namespace

bool Env::operator==(const Env& o) const {
  if (n != o.n || funs != o.funs || nums != o.nums || oracles.size() != o.oracles.size()) return false;
  for (std::size_t i = 0; i < oracles.size(); ++i)
    if (oracles[i].id() != o.oracles[i].id()) return false;
  return true;
}

std::size_t Env::hash() const {
  std::size_t h = n;
  for (const auto& o : oracles) h = mix(h, o.id());
  for (const auto& f : funs) {
    h = mix(h, f.length());
    for (auto v : f.values()) h = mix(h, v);
  }
  for (const auto& x : nums) h = mix(h, nat_hash(x));
  return h;
}

Unfold::Unfold(Comp c, Mode mode) : c_(std::move(c)), mode_(mode) {
  const auto& e = *c_.e;
  const auto& env = c_.env;
  auto arity = [&](const char* what) { finish(CompResult::fail(Outcome::not_an_index, what)); };
  switch (e.scheme) {
    case Scheme::invalid:
      finish(CompResult::fail(Outcome::not_an_index, "code " + e.code.str() + " is not an index"));
      break;
    case Scheme::s1:
      if (env.nums.empty()) arity("S1 needs a numeric argument");
      else finish(CompResult::of(env.nums[0] + 1));
      break;
    case Scheme::s2:
      finish(CompResult::of(e.q));
      break;
    case Scheme::s3:
      if (env.nums.empty()) arity("S3 needs a numeric argument");
      else finish(CompResult::of(env.nums[0]));
      break;
    case Scheme::s7:
      if (env.funs.empty() || env.nums.empty()) arity("S7 needs a function and a numeric argument");
      else finish(CompResult::of(Nat(env.funs[0].at(env.nums[0]))));
      break;
    case Scheme::s4:
      break;
    case Scheme::s6:
      if (!is_permutation_of(e.tau[0], env.oracles.size()) || !is_permutation_of(e.tau[1], env.funs.size()) ||
          !is_permutation_of(e.tau[2], env.nums.size()))
        arity("S6 permutation does not match the argument lists");
      break;
    case Scheme::s9:
      if (env.nums.empty()) arity("S9 needs the index as first numeric argument");
      break;
    case Scheme::s8_2:
      if (env.oracles.empty()) arity("S8.2 needs an oracle");
      break;
    case Scheme::s8_3:
    case Scheme::s8_3h: {
      if (env.nums.empty()) { arity("S8.3 needs the numeric argument b"); break; }
      if (env.n > FinSet::max_base) { arity("S8.3 base size above 64"); break; }
      if (e.scheme == Scheme::s8_3h && env.n * env.n > FinSet::max_base) { arity("S8.3H needs n*n <= 64"); break; }
      if (e.scheme == Scheme::s8_3 && mode_ == Mode::total && env.n > 16) { arity("S8.3 totality sweep needs n <= 16"); break; }
      ind_ = InductionRecord{env.nums[0], {FinSet(env.n)}, {{}}};
      cur_ = FinSet(env.n);
      next_ = FinSet(env.n);
      if (e.scheme == Scheme::s8_3 && mode_ == Mode::total) {
        sweep_count_ = env.n << env.n;
        sweep_table_.assign(std::size_t{1} << env.n, {});
        if (sweep_count_ == 0) close_induction();
      } else if (env.n == 0) {
        close_induction();
      }
      break;
    }
  }
}

Comp Unfold::child_env_with_head(const Index& e, const Nat& head) const {
  Comp out{e, c_.env};
  out.env.nums.insert(out.env.nums.begin(), head);
  return out;
}

Comp Unfold::induction_child(std::size_t c, const FinSet& f) const {
  Comp out{c_.e->e1, c_.env};
  out.env.funs.insert(out.env.funs.begin(), FinFun::characteristic(f).cons(c));
  out.env.nums.erase(out.env.nums.begin());
  return out;
}

Unfold::Step Unfold::next() {
  if (done_) return Step{false, {}, result_};
  const auto& e = *c_.e;
  const auto& env = c_.env;
  switch (e.scheme) {
    case Scheme::s4:
      if (phase_ == 0) return Step{true, Comp{e.e2, env}, {}};
      return Step{true, child_env_with_head(e.e1, vals_[0]), {}};
    case Scheme::s6: {
      Comp out{e.e1, Env{permuted(env.oracles, e.tau[0]), permuted(env.funs, e.tau[1]), permuted(env.nums, e.tau[2]), env.n}};
      return Step{true, std::move(out), {}};
    }
    case Scheme::s9: {
      Comp out{parse_index(env.nums[0]), env};
      out.env.nums.erase(out.env.nums.begin());
      return Step{true, std::move(out), {}};
    }
    case Scheme::s8_2:
      return Step{true, child_env_with_head(e.e1, Nat(vals_.size())), {}};
    case Scheme::s8_3:
    case Scheme::s8_3h:
      if (sweep_count_ > 0 && phase_ == 0) {
        std::size_t k = vals_.size();
        return Step{true, induction_child(k % env.n, FinSet(env.n, k / env.n)), {}};
      }
      return Step{true, induction_child(c_pos_, cur_), {}};
    default:
      break;
  }
  return Step{false, {}, CompResult::fail(Outcome::not_an_index, "no step")};
}

void Unfold::feed(const CompResult& r) {
  const auto& e = *c_.e;
  const auto& env = c_.env;
  if (!r.ok()) {
    if (r.kind == Outcome::budget_exceeded) { finish(r); return; }
    std::string inner = std::string(outcome_name(r.kind)) + (r.site.empty() ? "" : ": " + r.site);
    if (e.scheme == Scheme::s8_3 && sweep_count_ > 0 && phase_ == 0) {
      std::size_t k = vals_.size();
      FinSet f(env.n, k / env.n);
      finish(CompResult::fail(Outcome::totality_violation,
                              "G undefined at a=" + std::to_string(k % env.n) + ", f=" + f.str() + " [" + inner + "]"));
      return;
    }
    if (e.scheme == Scheme::s8_3 || e.scheme == Scheme::s8_3h) {
      std::size_t stage = ind_->stages.size() - 1;
      if (mode_ == Mode::total)
        finish(CompResult::fail(Outcome::totality_violation,
                                "G undefined on the trajectory at a=" + std::to_string(c_pos_) + " [" + inner + "]", stage));
      else
        finish(CompResult::fail(Outcome::partial_induction,
                                "G undefined at a=" + std::to_string(c_pos_) + ", f=" + cur_.str() + " [" + inner + "]",
                                stage));
      return;
    }
    finish(r);
    return;
  }
  switch (e.scheme) {
    case Scheme::s4:
      vals_.push_back(r.value);
      if (phase_ == 0) phase_ = 1;
      else finish(r);
      return;
    case Scheme::s6:
    case Scheme::s9:
      finish(r);
      return;
    case Scheme::s8_2: {
      vals_.push_back(r.value);
      const auto& oracle = env.oracles[0];
      if (vals_.size() < oracle.support()) return;
      std::vector<std::uint64_t> g;
      for (const auto& v : vals_) g.push_back(saturate_u64(v));
      query_ = FinFun(std::move(g));
      ++oracle_calls_;
      auto ans = oracle.apply(*query_);
      if (!ans) { finish(CompResult::fail(Outcome::oracle_undefined, "F1 undefined at " + fun_str(*query_))); return; }
      answer_ = *ans;
      finish(CompResult::of(*ans));
      return;
    }
    case Scheme::s8_3:
    case Scheme::s8_3h:
      if (sweep_count_ > 0 && phase_ == 0) {
        std::size_t k = vals_.size();
        vals_.push_back(r.value);
        sweep_table_[k / env.n].push_back(r.value);
        if (vals_.size() == sweep_count_) {
          phase_ = 1;
          // replay the trajectory from the swept table
          for (;;) {
            const auto& row = sweep_table_[cur_.mask()];
            for (std::size_t c = 0; c < env.n; ++c) {
              ind_->answers.back().push_back(row[c]);
              if (row[c] >= 1) next_ = next_.with(c);
            }
            if (next_.subset_of(cur_)) break;
            cur_ = cur_.unite(next_);
            next_ = FinSet(env.n);
            ind_->stages.push_back(cur_);
            ind_->answers.emplace_back();
          }
          close_induction();
        }
        return;
      }
      ind_->answers.back().push_back(r.value);
      if (r.value >= 1) next_ = next_.with(c_pos_);
      ++c_pos_;
      if (c_pos_ == env.n) advance_induction();
      return;
    default:
      finish(r);
  }
}

void Unfold::advance_induction() {
  if (next_.subset_of(cur_)) { close_induction(); return; }
  cur_ = cur_.unite(next_);
  next_ = FinSet(c_.env.n);
  c_pos_ = 0;
  ind_->stages.push_back(cur_);
  ind_->answers.emplace_back();
}

void Unfold::close_induction() {
  const std::size_t n = c_.env.n;
  auto b = to_index(ind_->b, n);
  if (c_.e->scheme == Scheme::s8_3) {
    finish(CompResult::of(Nat(b && cur_.contains(*b) ? 1 : 0)));
    return;
  }
  FinSet r(n * n);
  for (;;) {
    ++oracle_calls_;
    FinSet h = pwo_step(r, n, ind_->stages);
    if (h.subset_of(r)) break;
    r = r.unite(h);
  }
  finish(CompResult::of(Nat(b && relation_domain(r, n).contains(*b) ? 1 : 0)));
}

CompResult Evaluator::eval(const Comp& c) { return run(c, nullptr); }

std::unique_ptr<CompNode> Evaluator::eval_tree(const Comp& c) {
  auto root = std::make_unique<CompNode>();
  root->comp = c;
  run(c, root.get());
  return root;
}

CompResult Evaluator::run(const Comp& c, CompNode* root) {
  struct Frame {
    Unfold u;
    CompNode* node;
    std::size_t hash;
  };
  std::vector<Frame> stack;
  std::unordered_multimap<std::size_t, std::size_t> active;

  auto dispatch = [&](const Comp& comp, CompNode* node) -> std::optional<CompResult> {
    if (steps_ >= opt_.budget) return CompResult::fail(Outcome::budget_exceeded, "step budget exhausted");
    std::size_t h = 0;
    if (opt_.detect_loops) {
      h = mix(std::hash<const void*>{}(comp.e.get()), comp.env.hash());
      auto range = active.equal_range(h);
      for (auto it = range.first; it != range.second; ++it)
        if (stack[it->second].u.comp() == comp)
          return CompResult::fail(Outcome::loop, std::string(scheme_name(comp.e->scheme)) + " configuration repeats");
    }
    ++steps_;
    stack.push_back(Frame{Unfold(comp, opt_.mode), node, h});
    if (opt_.detect_loops) active.emplace(h, stack.size() - 1);
    return std::nullopt;
  };

  if (auto r = dispatch(c, root)) {
    if (root) root->result = *r;
    return *r;
  }
  for (;;) {
    auto step = stack.back().u.next();
    if (step.need) {
      CompNode* child = nullptr;
      if (CompNode* parent = stack.back().node) {
        parent->children.push_back(std::make_unique<CompNode>());
        child = parent->children.back().get();
        child->comp = step.child;
      }
      if (auto r = dispatch(step.child, child)) {
        if (child) child->result = *r;
        stack.back().u.feed(*r);
      }
      continue;
    }
    Frame& f = stack.back();
    CompResult result = step.result;
    steps_ += f.u.oracle_calls();
    if (result.ok() && steps_ > opt_.budget)
      result = CompResult::fail(Outcome::budget_exceeded, "step budget exhausted by oracle calls");
    if (CompNode* node = f.node) {
      node->result = result;
      node->query = f.u.query();
      node->answer = f.u.answer();
      node->induction = f.u.induction();
      node->sweep_children = f.u.sweep_children();
      std::size_t nm = 0;
      for (const auto& ch : node->children) nm = std::max(nm, ch->norm + 1);
      node->norm = nm;
    }
    if (opt_.detect_loops) {
      auto range = active.equal_range(f.hash);
      for (auto it = range.first; it != range.second; ++it)
        if (it->second == stack.size() - 1) { active.erase(it); break; }
    }
    stack.pop_back();
    if (stack.empty()) return result;
    stack.back().u.feed(result);
  }
}

CompResult eval_p(const Index& e, const Env& env, std::uint64_t budget) {
  Evaluator ev({Mode::partial, budget, true});
  return ev.eval(Comp{e, env});
}

CompResult eval_t(const Index& e, const Env& env, std::uint64_t budget) {
  Evaluator ev({Mode::total, budget, true});
  return ev.eval(Comp{e, env});
}

std::unique_ptr<CompNode> computation_tree(const Index& e, const Env& env, std::uint64_t budget) {
  Evaluator ev({Mode::partial, budget, true});
  auto t = ev.eval_tree(Comp{e, env});
  if (!t->result.ok()) throw nontermination_error(t->result);
  return t;
}

std::size_t norm(const Index& e, const Env& env, std::uint64_t budget) { return computation_tree(e, env, budget)->norm; }

}  // namespace indcalc
