#include "support.hpp"

#include <algorithm>

namespace eptas::testing {

Instance random_small_instance(std::uint64_t seed, int max_jobs, int max_machines,
                               std::uint64_t p_max) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  const int k = 1 + static_cast<int>(seed % 3);
  const int m = std::uniform_int_distribution<int>(k, std::max(k, max_machines))(rng);
  std::vector<int> mults(k, 1);
  for (int extra = m - k; extra > 0; --extra) {
    ++mults[std::uniform_int_distribution<int>(0, k - 1)(rng)];
  }
  // Mostly mid-sized; every fourth seed may be tiny.
  const int min_jobs = seed % 4 == 0 ? 1 : std::min(4, max_jobs);
  const int n = std::uniform_int_distribution<int>(min_jobs, max_jobs)(rng);
  return generate_instance(k, n, mults, p_max, seed);
}

LinearProgram random_bounded_lp(std::mt19937_64& rng, int max_vars, int max_rows) {
  auto coin = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  LinearProgram lp;
  lp.sense = coin(0, 4) == 0 ? Sense::Feasibility : Sense::Minimize;
  const int vars = coin(1, max_vars);
  for (int v = 0; v < vars; ++v) {
    const int lo = coin(-3, 2);
    const int up = lo + coin(0, 6);
    lp.add_variable(Rational(lo), Rational(up),
                    lp.sense == Sense::Minimize ? make_rational(coin(-5, 5), coin(1, 3)) : Rational(0));
  }
  const int rows = coin(0, max_rows);
  for (int r = 0; r < rows; ++r) {
    std::vector<Rational> coeffs(vars);
    for (auto& c : coeffs) c = make_rational(coin(-4, 4), coin(1, 2));
    const int rel = coin(0, 5);
    const Relation relation =
        rel == 0 ? Relation::Equal : (rel <= 3 ? Relation::LessEqual : Relation::GreaterEqual);
    lp.add_constraint(std::move(coeffs), relation, make_rational(coin(-6, 10), coin(1, 2)));
  }
  return lp;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<Rational> vertex_enumeration_min(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  std::vector<std::vector<Rational>> planes;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    planes.push_back(c.coefficients);
    rhs.push_back(c.rhs);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Rational> unit(n, Rational(0));
    unit[v] = 1;
    planes.push_back(unit);
    rhs.push_back(lp.lower[v]);
    if (lp.upper[v]) {
      planes.push_back(unit);
      rhs.push_back(*lp.upper[v]);
    }
  }

  std::optional<Rational> best;
  std::vector<bool> pick(planes.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(n, planes.size())), true);
  if (planes.size() < n) return std::nullopt;
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < planes.size(); ++i) {
      if (!pick[i]) continue;
      a.push_back(planes[i]);
      b.push_back(rhs[i]);
    }
    const auto x = solve_square(a, b);
    if (!x || !is_feasible_point(lp, *x)) continue;
    Rational value(0);
    if (lp.sense == Sense::Minimize) {
      for (std::size_t v = 0; v < n; ++v) value += lp.objective[v] * (*x)[v];
    }
    if (!best || value < *best) best = value;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

std::vector<Configuration> naive_configurations(const std::vector<Rational>& sizes,
                                                const Rational& bound,
                                                const std::vector<int>* caps) {
  std::vector<int> limit(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    limit[i] = static_cast<int>(floor(bound / sizes[i]).get_si());
    if (caps) limit[i] = std::min(limit[i], (*caps)[i]);
  }
  std::vector<Configuration> out;
  std::vector<int> counts(sizes.size(), 0);
  while (true) {
    Rational size(0);
    for (std::size_t i = 0; i < sizes.size(); ++i) size += counts[i] * sizes[i];
    if (size <= bound) out.push_back({counts, size});
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == limit[i]) counts[i++] = 0;
    if (i == counts.size()) break;
    ++counts[i];
  }
  return out;
}

std::vector<Configuration> sorted(std::vector<Configuration> configs) {
  std::sort(configs.begin(), configs.end(),
            [](const Configuration& a, const Configuration& b) { return a.counts < b.counts; });
  return configs;
}

}  // namespace eptas::testing
