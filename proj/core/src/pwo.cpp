#include "indcalc/pwo.hpp"

namespace indcalc {

std::size_t pair_bit(std::size_t n, std::size_t z, std::size_t w) { return z * n + w; }

FinOrder order_of_bits(const FinSet& r, std::size_t n) {
  FinOrder o{relation_domain(r, n), {}, false};
  for (auto b : r.members()) o.pairs.insert({b / n, b % n});
  return o;
}

FinSet bits_of_order(const FinOrder& o, std::size_t n) {
  FinSet r(n * n);
  for (const auto& [z, w] : o.pairs) r = r.with(pair_bit(n, z, w));
  return r;
}

FinSet relation_domain(const FinSet& r, std::size_t n) {
  FinSet d(n);
  for (std::size_t z = 0; z < n; ++z)
    if (r.contains(pair_bit(n, z, z))) d = d.with(z);
  return d;
}

namespace {

// R restricted to xs, with top (if nonempty) placed above everything
FinSet restrict_extend(const FinSet& r, std::size_t n, const FinSet& xs, const FinSet& top) {
  FinSet out(n * n);
  for (auto z : xs.members())
    for (auto w : xs.members())
      if (r.contains(pair_bit(n, z, w))) out = out.with(pair_bit(n, z, w));
  FinSet all = xs.unite(top);
  for (auto z : all.members())
    for (auto w : top.members()) out = out.with(pair_bit(n, z, w));
  return out;
}

}  // namespace

FinSet pwo_step(const FinSet& r, std::size_t n, const std::vector<FinSet>& trajectory) {
  FinOrder o = order_of_bits(r, n);
  if (!is_prewellordering(o)) return r;
  std::vector<std::size_t> rank(n, 0);
  for (auto z : o.domain.members()) rank[z] = rank_of(o, z);
  auto segment = [&](std::size_t g) {
    FinSet s(n);
    for (auto z : o.domain.members())
      if (rank[z] < g) s = s.with(z);
    return s;
  };
  const std::size_t alpha = trajectory.size() - 1;
  for (std::size_t g = 0;; ++g) {
    const FinSet& a = trajectory[std::min(g, alpha)];
    FinSet rg = segment(g);
    if (rg != a) {
      // disagreement first shows at g = b+1
      std::size_t b = g - 1;
      return restrict_extend(r, n, segment(b), trajectory[std::min(b + 1, alpha)].minus(trajectory[b]));
    }
    if (g >= alpha) return restrict_extend(r, n, rg, FinSet(n));
  }
}

FinSet pwo_fixed_point(std::size_t n, const std::vector<FinSet>& trajectory) {
  FinSet r(n * n);
  for (;;) {
    FinSet h = pwo_step(r, n, trajectory);
    if (h.subset_of(r)) return r;
    r = r.unite(h);
  }
}

PwoTranslation pwo_translate(const StepFunctional& f) {
  const std::size_t n = f.base_size();
  if (n * n > FinSet::max_base) throw std::invalid_argument("pwo_translate: n*n pair bits must fit 64");
  auto t = iterate(f);
  if (!t.closed) throw partiality_error(*t.error_stage);
  PwoTranslation p;
  p.n = n;
  p.trajectory = t.stages;
  p.h = StepFunctional(n * n, [n, traj = t.stages](const FinSet& r) -> std::optional<FinSet> {
    return pwo_step(r, n, traj);
  });
  return p;
}

}  // namespace indcalc
