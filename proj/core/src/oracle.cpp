#include "indcalc/oracle.hpp"

#include <atomic>
#include <stdexcept>

namespace indcalc {

namespace {
std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}
}  // namespace

Type2Oracle::Type2Oracle(std::size_t support, std::size_t range, std::vector<std::optional<Nat>> table)
    : support_(support), range_(range), table_(std::move(table)), name_("table"), id_(next_id()) {
  if (range == 0 && support > 0) throw std::invalid_argument("Type2Oracle: range must be positive");
  std::size_t want = 1;
  for (std::size_t i = 0; i < support; ++i) {
    if (want > (std::size_t{1} << 24) / std::max<std::size_t>(range, 1))
      throw std::invalid_argument("Type2Oracle: table too large");
    want *= range;
  }
  if (table_.size() != want)
    throw std::invalid_argument("Type2Oracle: table needs " + std::to_string(want) + " entries, got " +
                                std::to_string(table_.size()));
}

Type2Oracle::Type2Oracle(std::size_t support, Fn fn, std::string name)
    : support_(support), fn_(std::move(fn)), name_(std::move(name)), id_(next_id()) {}

std::optional<Nat> Type2Oracle::apply(const FinFun& g) const {
  if (fn_) return fn_(g.length() > support_ ? g.prefix(support_) : g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < support_; ++i) {
    std::uint64_t v = g.at(i);
    if (v >= range_) return std::nullopt;
    idx = idx * range_ + static_cast<std::size_t>(v);
  }
  return table_[idx];
}

std::vector<Type2Oracle> Type2Oracle::all_tables(std::size_t support, std::size_t range, std::size_t values) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < support; ++i) cells *= range;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= values;
  std::vector<Type2Oracle> out;
  out.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<std::optional<Nat>> t(cells);
    std::size_t x = k;
    for (std::size_t c = cells; c-- > 0;) {
      t[c] = Nat(x % values);
      x /= values;
    }
    out.emplace_back(support, range, std::move(t));
  }
  return out;
}

}  // namespace indcalc
