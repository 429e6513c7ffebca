#include "indcalc/compare.hpp"

#include "indcalc/fix.hpp"

namespace indcalc {

namespace {

std::size_t comp_hash(const Comp& c) {
  return std::hash<const void*>{}(c.e.get()) * 1000003u ^ c.env.hash();
}

bool is_ind(const Comp& c) { return c.e->scheme == Scheme::s8_3 || c.e->scheme == Scheme::s8_3h; }

}  // namespace

// the immediate subcomputations of one computation, discovered as their values become known
class StageComparator::Children {
 public:
  Children(Comp c, StageComparator& owner) : comp_(c), u_(std::move(c), Mode::partial), owner_(owner) {}

  const Comp& comp() const { return comp_; }

  // nullptr once the computation has no further children
  const Comp* child(std::size_t i) {
    while (kids_.size() <= i && !done_) {
      if (fed_ != kids_.size()) throw std::logic_error("child requested before its left sibling settled");
      auto s = u_.next();
      if (s.need) {
        kids_.push_back(std::move(s.child));
        vals_.emplace_back();
      } else {
        done_ = true;
        local_ = s.result;
      }
    }
    return i < kids_.size() ? &kids_[i] : nullptr;
  }

  const CompResult& local() const { return local_; }

  // only called on children already known to terminate
  void settle(std::size_t i) {
    if (vals_[i]) return;
    std::uint64_t left = owner_.budget_ > owner_.steps_ ? owner_.budget_ - owner_.steps_ : 0;
    if (left == 0) throw compare_budget_error("stage_compare: global budget exhausted");
    Evaluator ev({Mode::partial, left, true});
    auto r = ev.eval(kids_[i]);
    owner_.steps_ += ev.steps();
    if (r.kind == Outcome::budget_exceeded) throw compare_budget_error("stage_compare: budget exhausted settling a child");
    // only possible when neither compared computation terminates
    if (!r.ok()) throw compare_budget_error("stage_compare: neither side terminates (" + r.site + ")");
    vals_[i] = r;
    while (fed_ < kids_.size() && vals_[fed_]) u_.feed(*vals_[fed_++]);
  }

 private:
  Comp comp_;
  Unfold u_;
  StageComparator& owner_;
  std::vector<Comp> kids_;
  std::vector<std::optional<CompResult>> vals_;
  std::size_t fed_ = 0;
  bool done_ = false;
  CompResult local_;
};

StageComparator::Route StageComparator::route_of(const Comp& c1, const Comp& c2) {
  if (is_ind(c1) && is_ind(c2)) return Route::ind_vs_ind;
  if (c1.e->scheme == Scheme::s8_2 && is_ind(c2)) return Route::oracle_vs_ind;
  if (c1.e->scheme == Scheme::s4 && is_ind(c2)) return Route::s4_vs_ind;
  return Route::generic;
}

std::shared_ptr<StageComparator::Children> StageComparator::children(const Comp& c) {
  auto& bucket = lists_[comp_hash(c)];
  for (const auto& l : bucket)
    if (l->comp() == c) return l;
  bucket.push_back(std::make_shared<Children>(c, *this));
  return bucket.back();
}

int StageComparator::compare(const Comp& c1, const Comp& c2) {
  steps_ = 0;
  active_.clear();
  return compare_rec(c1, c2);
}

int StageComparator::compare_rec(const Comp& x0, const Comp& y0) {
  // ||x|| <= ||y|| iff every child of x is dominated by some child of y, the children of
  // y being unfolded left to right (stage by stage for inductions) only past computations
  // that lost a comparison and therefore terminate; a child of x that found a dominator
  // terminates as well, so x unfolds too
  auto p = fix([this](const auto& self, const Comp& x, const Comp& y) -> int {
    if (++steps_ > budget_) throw compare_budget_error("stage_compare: global budget exhausted");
    std::size_t key = comp_hash(x) * 31u + comp_hash(y);
    auto& bucket = memo_[key];
    for (const auto& [k, v] : bucket)
      if (k.first == x && k.second == y) return v;
    // a pair revisiting itself descends forever: both sides diverge
    for (const auto* q : active_)
      if (q->first == x && q->second == y) throw compare_budget_error("stage_compare: neither side terminates");
    if (active_.size() >= max_depth) throw compare_budget_error("stage_compare: comparison depth cap reached");
    const std::pair<Comp, Comp> here{x, y};
    active_.push_back(&here);
    struct Pop {
      std::vector<const std::pair<Comp, Comp>*>& v;
      ~Pop() { v.pop_back(); }
    } pop{active_};
    auto xs = children(x);
    auto ys = children(y);
    int r = -1;
    for (std::size_t i = 0; r < 0; ++i) {
      const Comp* xi = xs->child(i);
      if (!xi) {
        r = xs->local().ok() ? 1 : 0;
        break;
      }
      const Comp xc = *xi;
      for (std::size_t j = 0;; ++j) {
        const Comp* yj = ys->child(j);
        if (!yj) {
          r = ys->local().ok() ? 0 : 1;
          break;
        }
        const Comp yc = *yj;
        if (self(xc, yc) == 1) break;
        ys->settle(j);
      }
      if (r < 0) xs->settle(i);
    }
    memo_[key].push_back({{x, y}, r});
    return r;
  });
  return p(x0, y0);
}

int stage_compare(const Comp& c1, const Comp& c2, std::uint64_t budget) {
  StageComparator sc(budget);
  return sc.compare(c1, c2);
}

std::size_t gandy_select(const Index& e, const Env& env, std::size_t count, std::uint64_t budget) {
  std::vector<Comp> cands;
  for (std::size_t k = 0; k < count; ++k) {
    Comp c{e, env};
    c.env.nums.insert(c.env.nums.begin(), Nat(k));
    cands.push_back(std::move(c));
  }
  StageComparator sc(budget);
  for (std::size_t k = 0; k < count; ++k) {
    bool wins = true;
    for (std::size_t j = 0; j < count && wins; ++j) {
      try {
        wins = sc.compare(cands[k], cands[j]) == 1;
      } catch (const compare_budget_error&) {
        wins = false;
      }
    }
    if (wins) return k;
  }
  throw selection_error("gandy_select: no candidate below " + std::to_string(count) + " converges within budget");
}

}  // namespace indcalc
