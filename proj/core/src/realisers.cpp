#include "indcalc/realisers.hpp"

#include "indcalc/induction.hpp"
#include "indcalc/seqcode.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace indcalc {

DepthOracle::DepthOracle(std::size_t depth, std::vector<std::size_t> table) : depth_(depth), table_(std::move(table)) {
  if (depth > 24) throw std::invalid_argument("DepthOracle: depth above 24");
  if (table_.size() != (std::size_t{1} << depth))
    throw std::invalid_argument("DepthOracle: table needs 2^L entries");
  for (auto v : table_)
    if (v > depth) throw std::invalid_argument("DepthOracle: value " + std::to_string(v) + " above L");
}

DepthOracle DepthOracle::constant(std::size_t depth, std::size_t v) {
  return DepthOracle(depth, std::vector<std::size_t>(std::size_t{1} << depth, v));
}

Bits DepthOracle::bits(std::size_t leaf) const {
  Bits out(depth_);
  for (std::size_t k = 0; k < depth_; ++k) out[k] = (leaf >> (depth_ - 1 - k)) & 1u;
  return out;
}

Bits DepthOracle::neighbourhood(std::size_t leaf) const {
  Bits b = bits(leaf);
  b.resize(apply(leaf));
  return b;
}

std::vector<std::size_t> strong_hb(const DepthOracle& f) {
  const std::size_t l = f.depth();
  std::vector<bool> covered(f.leaves(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.leaves(); ++i) {
    if (covered[i]) continue;
    out.push_back(i);
    std::size_t shift = l - f.apply(i);
    std::size_t lo = (i >> shift) << shift;
    std::fill(covered.begin() + static_cast<std::ptrdiff_t>(lo),
              covered.begin() + static_cast<std::ptrdiff_t>(lo + (std::size_t{1} << shift)), true);
  }
  return out;
}

std::vector<Bits> weak_from_strong(const DepthOracle& f, const std::vector<std::size_t>& leaves) {
  std::vector<Bits> out;
  for (auto i : leaves) out.push_back(f.neighbourhood(i));
  return out;
}

bool is_cover(const std::vector<Bits>& cover, std::size_t depth) {
  for (std::size_t leaf = 0; leaf < (std::size_t{1} << depth); ++leaf) {
    bool hit = false;
    for (const auto& s : cover) {
      if (s.size() > depth) continue;
      bool ext = true;
      for (std::size_t k = 0; k < s.size() && ext; ++k) ext = s[k] == (((leaf >> (depth - 1 - k)) & 1u) != 0);
      if (ext) { hit = true; break; }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::size_t> pincherle_witness(const DepthOracle& f) {
  const std::size_t l = f.depth();
  // flag[k][s]: some leaf below the length-k prefix s has F = k
  std::vector<std::vector<bool>> flag(l + 1);
  for (std::size_t k = 0; k <= l; ++k) flag[k].assign(std::size_t{1} << k, false);
  for (std::size_t i = 0; i < f.leaves(); ++i) {
    std::size_t k = f.apply(i);
    flag[k][i >> (l - k)] = true;
  }
  std::vector<std::size_t> g(f.leaves());
  for (std::size_t i = 0; i < f.leaves(); ++i) {
    std::size_t k = 0;
    while (!flag[k][i >> (l - k)]) ++k;
    g[i] = k;
  }
  return g;
}

std::size_t pincherle(const DepthOracle& f) {
  auto g = pincherle_witness(f);
  return *std::max_element(g.begin(), g.end());
}

PinConstruction::PinConstruction(const StepFunctional& f) : f_(f), b_(f.base_size()) {
  if (b_ == 0 || b_ > 3) throw std::invalid_argument("PinConstruction: B must be 1, 2 or 3");
  auto trace = iterate(f_);
  if (!trace.closed) throw partiality_error(*trace.error_stage);
  auto table = f_.tabulate();
  for (const auto& v : table)
    if (!v) throw std::invalid_argument("PinConstruction: F must be total");
  k_ = pair(Nat(b_ - 1), Nat(b_ - 1)).convert_to<std::size_t>() + 1;
  elems_ = 0;
  for (std::size_t c = 0; c < k_; ++c) {
    auto [z, w] = unpair(Nat(c));
    decoded_.emplace_back(z.convert_to<std::size_t>(), w.convert_to<std::size_t>());
    elems_ = std::max({elems_, decoded_.back().first + 1, decoded_.back().second + 1});
  }
  auto code = [](std::size_t z, std::size_t w) { return pair(Nat(z), Nat(w)).convert_to<std::size_t>(); };

  // preorders among the subsets of the universe, then the prefixes that still extend to one
  const std::uint64_t total = std::uint64_t{1} << k_;
  std::vector<bool> pre(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (std::size_t c = 0; c < k_ && ok; ++c) {
      if (!((x >> c) & 1u)) continue;
      auto [z, w] = decoded_[c];
      for (auto e : {z, w}) {
        std::size_t ee = code(e, e);
        if (ee >= k_ || !((x >> ee) & 1u)) ok = false;
      }
      for (std::size_t d = 0; d < k_ && ok; ++d) {
        if (!((x >> d) & 1u) || decoded_[d].first != w) continue;
        std::size_t t = code(z, decoded_[d].second);
        if (t >= k_ || !((x >> t) & 1u)) ok = false;
      }
    }
    pre[x] = ok;
  }
  good_prefix_.resize(k_ + 1);
  for (std::size_t k = 0; k <= k_; ++k) good_prefix_[k].assign(std::size_t{1} << k, false);
  for (std::uint64_t x = 0; x < total; ++x)
    if (pre[x])
      for (std::size_t k = 0; k <= k_; ++k) good_prefix_[k][x & ((std::uint64_t{1} << k) - 1)] = true;

  true_order_ = stage_order(trace);
  for (const auto& [z, w] : true_order_.pairs) true_mask_ |= std::uint64_t{1} << code(z, w);

  cache_.assign(total, std::nullopt);
  cases_.assign(total, 4);
  for (std::uint64_t x = 0; x < total; ++x) {
    fill(x);
    if (cache_[x]) threshold_ = std::max(threshold_, *cache_[x] + 1);
  }
}

void PinConstruction::fill(std::uint64_t x) {
  // case 1
  bool preorder = good_prefix_[k_][x];
  if (!preorder) {
    std::size_t k = 0;
    while (good_prefix_[k][x & ((std::uint64_t{1} << k) - 1)]) ++k;
    cache_[x] = k;
    cases_[x] = 1;
    return;
  }
  FinOrder o{FinSet(elems_), {}, false};
  for (std::size_t c = 0; c < k_; ++c)
    if ((x >> c) & 1u) {
      o.pairs.insert(decoded_[c]);
      o.domain = o.domain.with(decoded_[c].first).with(decoded_[c].second);
    }
  auto code = [](std::size_t z, std::size_t w) { return pair(Nat(z), Nat(w)).convert_to<std::size_t>(); };
  auto lt = [&](std::size_t z, std::size_t w) { return o.leq(z, w) && !o.leq(w, z); };
  FinSet wx = well_founded_part(o);
  auto apply_f = [&](const FinSet& s) {
    FinSet in(b_);
    for (auto e : s.members())
      if (e < b_) in = in.with(e);
    return *f_.apply(in);
  };
  // case 2
  std::vector<std::size_t> defects;
  for (auto w : wx.members()) {
    FinSet fw(elems_), gw(elems_);
    for (auto v : wx.members()) {
      if (lt(v, w)) fw = fw.with(v);
      if (o.leq(v, w)) gw = gw.with(v);
    }
    FinSet step = fw;
    for (auto e : apply_f(fw).members()) step = step.with(e);
    if (step != gw) defects.push_back(w);
  }
  std::optional<std::size_t> pick;
  for (auto w : defects) {
    bool minimal = std::none_of(defects.begin(), defects.end(), [&](std::size_t v) { return lt(v, w); });
    if (minimal) { pick = w; break; }
  }
  if (pick) {
    std::size_t w = *pick;
    FinSet fw(elems_), gw(elems_);
    for (auto v : wx.members()) {
      if (lt(v, w)) fw = fw.with(v);
      if (o.leq(v, w)) gw = gw.with(v);
    }
    FinSet fx = apply_f(fw);
    if (!(w < b_ && fx.contains(w))) {
      // w itself sits in the wrong stage; the z = w reading of sub-case a can agree with the
      // true order, so cover <w,w> together with a true newcomer z against w
      std::size_t out = code(w, w);
      for (std::size_t z = 0; z < b_; ++z)
        if (fx.contains(z) && !fw.contains(z)) {
          out = std::max({out, code(z, w), code(w, z)});
          break;
        }
      cache_[x] = out + 1;
      cases_[x] = 2;
      return;
    }
    for (std::size_t z = 0; z < elems_; ++z)
      if (!fw.contains(z) && !(z < b_ && fx.contains(z)) && gw.contains(z)) {
        cache_[x] = std::max(code(z, w), code(w, z)) + 1;
        cases_[x] = 2;
        return;
      }
    for (std::size_t z = 0; z < elems_; ++z)
      if (!fw.contains(z) && z < b_ && fx.contains(z) && !gw.contains(z)) {
        cache_[x] = code(z, w) + 1;
        cases_[x] = 2;
        return;
      }
    throw std::logic_error("PinConstruction: defect without a witness");
  }
  // case 3
  FinSet g = apply_f(wx);
  for (std::size_t z = 0; z < b_; ++z) {
    if (wx.contains(z) || !g.contains(z)) continue;
    std::size_t zz = code(z, z);
    if (zz >= k_ || !((x >> zz) & 1u)) {
      cache_[x] = zz + 1;
      cases_[x] = 3;
      return;
    }
    for (std::size_t w = 0; w < elems_; ++w)
      if (lt(w, z) && !wx.contains(w)) {
        cache_[x] = std::max(code(z, w), code(w, z)) + 1;
        cases_[x] = 3;
        return;
      }
    throw std::logic_error("PinConstruction: improper segment without a witness");
  }
}

std::size_t PinConstruction::value(std::size_t n, std::size_t x, std::size_t y, std::uint64_t xmask) const {
  if (cache_.at(xmask)) return *cache_[xmask];
  std::size_t xx = pair(Nat(x), Nat(x)).convert_to<std::size_t>();
  std::size_t yy = pair(Nat(y), Nat(y)).convert_to<std::size_t>();
  std::size_t xy = pair(Nat(x), Nat(y)).convert_to<std::size_t>();
  auto in = [&](std::size_t c) { return c < k_ && ((xmask >> c) & 1u); };
  // in case 4 W^X is the field of X
  return in(xx) && in(yy) && in(xy) ? n : 0;
}

std::uint64_t PinConstruction::mask_of_leaf(std::size_t leaf) const {
  std::uint64_t m = 0;
  for (std::size_t c = 0; c < k_; ++c)
    if ((leaf >> (depth() - 1 - c)) & 1u) m |= std::uint64_t{1} << c;
  return m;
}

std::size_t PinConstruction::leaf_of_mask(std::uint64_t mask) const {
  std::size_t leaf = 0;
  for (std::size_t c = 0; c < k_; ++c)
    if ((mask >> c) & 1u) leaf |= std::size_t{1} << (depth() - 1 - c);
  return leaf;
}

DepthOracle PinConstruction::oracle(std::size_t n, std::size_t x, std::size_t y) const {
  if (n > depth()) throw std::invalid_argument("G_{n,x,y}: n above the depth");
  std::vector<std::size_t> t(std::size_t{1} << depth());
  for (std::size_t leaf = 0; leaf < t.size(); ++leaf) t[leaf] = value(n, x, y, mask_of_leaf(leaf));
  return DepthOracle(depth(), std::move(t));
}

Type2Oracle g_nxy(std::size_t n, std::size_t x, std::size_t y, const PinConstruction& pin) {
  const PinConstruction* p = &pin;
  return Type2Oracle(
      pin.universe(),
      [p, n, x, y](const FinFun& g) -> std::optional<Nat> {
        std::uint64_t m = 0;
        for (std::size_t c = 0; c < p->universe(); ++c) {
          if (g.at(c) > 1) return std::nullopt;
          if (g.at(c)) m |= std::uint64_t{1} << c;
        }
        return Nat(p->value(n, x, y, m));
      },
      "G_nxy");
}

FinOrder recover_pwo(const PinConstruction& pin, const PincherleRealiser& m) {
  const std::size_t b = pin.true_order().domain.base_size();
  const std::size_t n = pin.threshold();
  FinOrder out{FinSet(b), {}, false};
  for (std::size_t x = 0; x < b; ++x)
    for (std::size_t y = 0; y < b; ++y)
      if (m(pin.oracle(n, x, y)) >= n) {
        out.pairs.insert({x, y});
        out.domain = out.domain.with(x).with(y);
      }
  return out;
}

FinOrder recover_pwo(const StepFunctional& f, const PincherleRealiser& m) { return recover_pwo(PinConstruction(f), m); }

}  // namespace indcalc
