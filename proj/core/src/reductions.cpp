#include "indcalc/reductions.hpp"

#include "indcalc/seqcode.hpp"

#include <algorithm>
#include <map>

namespace indcalc {

BinarySeqs::BinarySeqs(std::size_t n) : n_(n) {
  if (n > 5) throw std::invalid_argument("BinarySeqs: n <= 5 keeps the universe inside 64 codes");
}

std::size_t BinarySeqs::id(const std::vector<bool>& s) const {
  if (s.size() > n_) throw std::out_of_range("binary sequence longer than n");
  std::size_t v = 0;
  for (bool bit : s) v = 2 * v + (bit ? 1 : 0);
  return ((std::size_t{1} << s.size()) - 1) + v;
}

std::vector<bool> BinarySeqs::seq(std::size_t id) const {
  std::size_t len = 0;
  while (((std::size_t{1} << (len + 1)) - 1) <= id) ++len;
  std::size_t v = id - ((std::size_t{1} << len) - 1);
  std::vector<bool> s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = (v >> (len - 1 - i)) & 1u;
  return s;
}

Nat BinarySeqs::code(std::size_t id) const {
  std::vector<Nat> xs;
  for (bool bit : seq(id)) xs.emplace_back(bit ? 1 : 0);
  return encode_seq(xs);
}

bool BinarySeqs::lex_less(std::size_t a, std::size_t b) const {
  auto x = seq(a), y = seq(b);
  std::size_t k = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < k; ++i)
    if (x[i] != y[i]) return y[i];
  return x.size() < y.size();
}

FinSet SingleValued::bits(const FinSet& b) const {
  FinSet out(seqs.n());
  for (auto id : b.members()) {
    auto s = seqs.seq(id);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) out = out.with(i);
  }
  return out;
}

namespace {

std::vector<bool> approx(const FinSet& target, std::size_t len) {
  std::vector<bool> s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = target.contains(i);
  return s;
}

}  // namespace

SingleValued single_valued_of(const StepFunctional& f) {
  const std::size_t n = f.base_size();
  auto f0 = f.apply(FinSet(n));
  if (!f0 || f0->empty()) throw std::invalid_argument("single_valued_of: F must be nontrivial, F(empty) nonempty");
  BinarySeqs seqs(n);
  auto g = [f, seqs, n](const FinSet& b) -> std::size_t {
    auto ids = b.members();
    std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) { return seqs.lex_less(x, y); });
    // the completed rounds end at the last full-length approximation
    std::size_t split = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (seqs.seq(ids[i]).size() == n) split = i + 1;
    FinSet a(n);
    for (std::size_t i = 0; i < split; ++i) {
      auto s = seqs.seq(ids[i]);
      for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k]) a = a.with(k);
    }
    auto fa = f.apply(a);
    if (!fa) throw partiality_error(0);
    const FinSet target = a.unite(*fa);
    if (split == ids.size()) {
      if (fa->subset_of(a)) return 0;
      std::size_t m = fa->minus(a).min();
      return seqs.id(approx(target, m + 1));
    }
    if (fa->subset_of(a)) return 0;
    std::size_t len = fa->minus(a).min() + 1;
    for (std::size_t i = split; i < ids.size(); ++i, ++len)
      if (seqs.seq(ids[i]) != approx(target, len)) return 0;
    return seqs.id(approx(target, len));
  };
  return SingleValued{seqs, PointFunctional(seqs.count(), g)};
}

std::pair<FinSet, FinSet> pigeonhole_pair(const PointFunctional& g) {
  const std::size_t n = g.base_size();
  std::vector<FinSet> stages{FinSet(n)};
  std::map<std::size_t, std::size_t> added_at;
  for (;;) {
    const FinSet cur = stages.back();
    std::size_t x = g.apply(cur);
    if (cur.contains(x)) return {stages[added_at.at(x)], cur};
    if (x >= n) throw productivity_error("pigeonhole_pair: G left the universe");
    added_at[x] = stages.size() - 1;
    stages.push_back(cur.with(x));
  }
}

StepFunctional e2_functional(const FinFun& f) {
  const std::size_t n = f.length();
  return StepFunctional(n, [f, n](const FinSet& a) -> std::optional<FinSet> {
    FinSet out = f.support_set(n);
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (a.contains(k + 1)) out = out.with(k);
    return out;
  });
}

int e2_via_ind(const FinFun& f) { return lfp(e2_functional(f)).contains(0) ? 1 : 0; }

SuslinTree::SuslinTree(std::size_t b, std::size_t depth, std::vector<std::uint64_t> values)
    : b_(b), d_(depth), values_(std::move(values)) {
  if (b < 1) throw std::invalid_argument("SuslinTree: branching must be positive");
  if (values_.size() != level_start(d_ + 1)) throw std::invalid_argument("SuslinTree: wrong number of node values");
}

SuslinTree::SuslinTree(std::size_t b, std::size_t depth,
                       const std::function<std::uint64_t(const std::vector<std::size_t>&)>& label)
    : b_(b), d_(depth) {
  if (b < 1) throw std::invalid_argument("SuslinTree: branching must be positive");
  values_.resize(level_start(d_ + 1));
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = label(path(i));
}

std::size_t SuslinTree::level_start(std::size_t l) const {
  std::size_t s = 0, w = 1;
  for (std::size_t i = 0; i < l; ++i, w *= b_) s += w;
  return s;
}

std::size_t SuslinTree::level(std::size_t node) const {
  std::size_t l = 0;
  while (level_start(l + 1) <= node) ++l;
  return l;
}

std::size_t SuslinTree::child(std::size_t node, std::size_t digit) const {
  std::size_t l = level(node);
  return level_start(l + 1) + (node - level_start(l)) * b_ + digit;
}

std::vector<std::size_t> SuslinTree::path(std::size_t node) const {
  std::size_t l = level(node);
  std::size_t off = node - level_start(l);
  std::vector<std::size_t> p(l);
  for (std::size_t i = l; i-- > 0;) {
    p[i] = off % b_;
    off /= b_;
  }
  return p;
}

std::uint64_t SuslinTree::value_at_code(const Nat& code) const {
  auto s = decode_seq(code);
  if (!s || s->size() > d_) throw std::out_of_range("SuslinTree: code is not a node");
  std::size_t node = 0;
  for (const auto& x : *s) {
    auto digit = to_index(x, b_);
    if (!digit) throw std::out_of_range("SuslinTree: digit outside the alphabet");
    node = child(node, *digit);
  }
  return values_[node];
}

FinSet zero_subtree(const SuslinTree& t) {
  FinSet in(t.node_count());
  in = in.with(0);
  for (std::size_t node = 0; node < t.node_count(); ++node) {
    if (!in.contains(node) || t.level(node) == t.depth()) continue;
    for (std::size_t c = 0; c < t.branching(); ++c) {
      std::size_t ch = t.child(node, c);
      if (t.value(ch) == 0) in = in.with(ch);
    }
  }
  return in;
}

StepFunctional suslin_functional(const SuslinTree& t) {
  FinSet tf = zero_subtree(t);
  return StepFunctional(t.node_count(), [t, tf](const FinSet& a) -> std::optional<FinSet> {
    FinSet out(t.node_count());
    for (auto s : tf.members()) {
      if (t.level(s) >= t.depth()) continue;
      bool all_in = true;
      for (std::size_t c = 0; c < t.branching() && all_in; ++c) {
        std::size_t ch = t.child(s, c);
        if (tf.contains(ch) && !a.contains(ch)) all_in = false;
      }
      if (all_in) out = out.with(s);
    }
    return out;
  });
}

int suslin_via_ind(const SuslinTree& t) {
  if (t.node_count() > FinSet::max_base) throw std::invalid_argument("suslin_via_ind: tree larger than 64 nodes");
  return lfp(suslin_functional(t)).contains(0) ? 0 : 1;
}

}  // namespace indcalc
