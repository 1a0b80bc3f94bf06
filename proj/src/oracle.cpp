#include "eptas/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "eptas/errors.hpp"

namespace eptas {

namespace {

void check_limits(const Instance& inst, const OracleLimits& limits) {
  if (inst.num_jobs() > limits.jobs || inst.num_machines() > limits.machines) {
    throw LimitExceeded("oracle limited to " + std::to_string(limits.jobs) + " jobs and " +
                        std::to_string(limits.machines) + " machines");
  }
}

enum class Goal { MinimizeMax, MaximizeMin };

class Search {
 public:
  Search(const Instance& inst, const OracleLimits& limits, Goal goal)
      : inst_(inst), pruning_(limits.symmetry_pruning), goal_(goal) {
    order_.resize(inst.num_jobs());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return inst.min_time(a) > inst.min_time(b); });
    load_.resize(inst.num_types());
    for (int t = 0; t < inst.num_types(); ++t) load_[t].assign(inst.multiplicity(t), Rational(0));
    opened_.assign(inst.num_types(), 0);
    current_.assignment.resize(inst.num_jobs());
  }

  OracleResult run() {
    descend(0);
    return {*best_, best_schedule_};
  }

 private:
  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      Rational value = objective();
      if (!best_ || better(value, *best_)) {
        best_ = std::move(value);
        best_schedule_ = current_;
      }
      return;
    }
    const int j = order_[depth];
    for (int t = 0; t < inst_.num_types(); ++t) {
      const int reachable = pruning_ ? std::min(opened_[t] + 1, inst_.multiplicity(t))
                                     : inst_.multiplicity(t);
      for (int i = 0; i < reachable; ++i) {
        Rational& load = load_[t][i];
        load += inst_.time(t, j);
        // Loads only grow, so a partial makespan already >= best cannot win.
        const bool hopeless = goal_ == Goal::MinimizeMax && best_ && load >= *best_;
        if (!hopeless) {
          const bool opens = i == opened_[t];
          if (opens) ++opened_[t];
          current_.assignment[j] = {t, i};
          descend(depth + 1);
          if (opens) --opened_[t];
        }
        load -= inst_.time(t, j);
      }
    }
  }

  [[nodiscard]] Rational objective() const {
    Rational value = load_[0][0];
    for (const auto& row : load_) {
      for (const auto& l : row) {
        if (goal_ == Goal::MinimizeMax ? l > value : l < value) value = l;
      }
    }
    return value;
  }

  [[nodiscard]] bool better(const Rational& a, const Rational& b) const {
    return goal_ == Goal::MinimizeMax ? a < b : a > b;
  }

  const Instance& inst_;
  bool pruning_;
  Goal goal_;
  std::vector<int> order_;
  std::vector<std::vector<Rational>> load_;
  std::vector<int> opened_;
  Schedule current_;
  std::optional<Rational> best_;
  Schedule best_schedule_;
};

}  // namespace

OracleResult brute_force_makespan(const Instance& inst, const OracleLimits& limits) {
  check_limits(inst, limits);
  return Search(inst, limits, Goal::MinimizeMax).run();
}

OracleResult brute_force_min_load(const Instance& inst, const OracleLimits& limits) {
  check_limits(inst, limits);
  return Search(inst, limits, Goal::MaximizeMin).run();
}

}  // namespace eptas
