#pragma once
#include "indcalc/eval.hpp"

#include <memory>
#include <unordered_map>

namespace indcalc {

struct compare_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// decides ||c1|| <= ||c2|| when at least one side terminates; a divergent side has
// norm above every finite norm
class StageComparator {
 public:
  explicit StageComparator(std::uint64_t budget = 5'000'000) : budget_(budget) {}
  int compare(const Comp& c1, const Comp& c2);
  std::uint64_t steps() const { return steps_; }

  // which simulation handled the top-level pair
  enum class Route { generic, s4_vs_ind, oracle_vs_ind, ind_vs_ind };
  static Route route_of(const Comp& c1, const Comp& c2);

  class Children;

 private:
  std::shared_ptr<Children> children(const Comp& c);
  int compare_rec(const Comp& x, const Comp& y);

  static constexpr std::size_t max_depth = 20000;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<const std::pair<Comp, Comp>*> active_;
  std::unordered_map<std::size_t, std::vector<std::shared_ptr<Children>>> lists_;
  std::unordered_map<std::size_t, std::vector<std::pair<std::pair<Comp, Comp>, int>>> memo_;
};

int stage_compare(const Comp& c1, const Comp& c2, std::uint64_t budget = 5'000'000);

// least candidate k < count whose computation (k prepended to nums) wins every comparison
std::size_t gandy_select(const Index& e, const Env& env, std::size_t count, std::uint64_t budget = 200'000);

struct selection_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace indcalc
