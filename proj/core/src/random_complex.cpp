#include "toric/random_complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "toric/errors.hpp"

namespace toric {

using linalg::Matrix;

FilteredComplex random_filtered_complex(std::uint64_t seed, std::size_t case_index,
                                        const RandomComplexOptions& opt) {
  if (opt.max_generators == 0 || opt.min_degree > opt.max_degree || opt.degree_span < 1)
    throw InvalidArgument("invalid random complex options");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&rng](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  auto coin = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

  const auto n = static_cast<std::size_t>(uniform(1, static_cast<long>(opt.max_generators)));
  const long deg_lo = uniform(opt.min_degree, std::max(opt.min_degree, opt.max_degree - opt.degree_span + 1));
  const long deg_hi = std::min<long>(opt.max_degree, deg_lo + opt.degree_span - 1);
  std::vector<FilteredComplex::Generator> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back({"x" + std::to_string(i), static_cast<int>(uniform(deg_lo, deg_hi)),
                    static_cast<double>(uniform(1, opt.max_level_numerator)) /
                        opt.level_denominator});
  }

  // d0: a random matching of x onto lower-level generators of one degree less.
  std::vector<long> target(n, -1);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (auto x : order) {
    if (used[x] || !coin(opt.pair_probability)) continue;
    std::vector<std::size_t> cands;
    for (std::size_t y = 0; y < n; ++y)
      if (!used[y] && y != x && gens[y].degree == gens[x].degree - 1 && gens[y].level < gens[x].level)
        cands.push_back(y);
    if (cands.empty()) continue;
    auto y = cands[static_cast<std::size_t>(uniform(0, static_cast<long>(cands.size()) - 1))];
    target[x] = static_cast<long>(y);
    used[x] = used[y] = true;
  }

  // Per-degree unitriangular U in the (level, index) order.
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < n; ++i) by_degree[gens[i].degree].push_back(i);
  std::map<int, Matrix> U, Uinv;
  for (auto& [k, idx] : by_degree) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::pair{gens[a].level, a} < std::pair{gens[b].level, b};
    });
    Matrix u(idx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
      u(c, c) = 1;
      for (std::size_t r = 0; r < c; ++r)
        if (coin(0.5)) u(r, c) = Rational(uniform(-opt.coefficient_range, opt.coefficient_range));
    }
    Uinv[k] = linalg::inverse(u);
    U[k] = std::move(u);
  }

  // d = U d0 U^{-1}, degree by degree, in the sorted local coordinates.
  std::vector<FilteredComplex::Chain> boundary(n);
  for (const auto& [k, idx] : by_degree) {
    auto prev = by_degree.find(k - 1);
    if (prev == by_degree.end()) continue;
    const auto& pidx = prev->second;
    std::map<std::size_t, std::size_t> local_prev;
    for (std::size_t i = 0; i < pidx.size(); ++i) local_prev[pidx[i]] = i;
    Matrix d0(pidx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      if (target[idx[c]] >= 0) d0(local_prev.at(static_cast<std::size_t>(target[idx[c]])), c) = 1;
    Matrix d = U.at(k - 1) * d0 * Uinv.at(k);
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t r = 0; r < pidx.size(); ++r)
        if (!d(r, c).is_zero()) boundary[idx[c]].emplace_back(pidx[r], d(r, c));
  }
  return FilteredComplex(std::move(gens), std::move(boundary));
}

namespace {

void run_case(std::size_t i, std::uint64_t seed, const RandomComplexOptions& opt,
              SelftestSummary& local) {
  FilteredComplex c = random_filtered_complex(seed, i, opt);
  DerivedComplex d = derived_complex(c);
  ++local.cases;
  if (!derived_invariants_hold(d)) {
    ++local.invariant_failures;
    local.failures.push_back("case " + std::to_string(i) + ": derived complex invariants fail");
  }
  const int R = d.steps();
  auto degs = c.degrees();
  for (int k = degs.front() - 1; k <= degs.back() + 1; ++k) {
    for (int s = 1; s <= R; ++s) {
      for (int t = s; t <= R + 1; ++t) {
        double cs = d.step_levels[s - 1];
        double ct = t > R ? kInfiniteLevel : d.step_levels[t - 1];
        auto direct = inclusion_image_rank(c, k, cs, ct);
        auto via_d = inclusion_image_rank(d.complex, k, s, t);
        ++local.comparisons;
        if (direct != via_d) {
          ++local.mismatches;
          local.failures.push_back("case " + std::to_string(i) + ": k=" + std::to_string(k) +
                                   " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                                   " direct=" + std::to_string(direct) +
                                   " derived=" + std::to_string(via_d));
        }
      }
    }
  }
}

}  // namespace

SelftestSummary filtered_selftest(std::size_t cases, std::uint64_t seed,
                                  const RandomComplexOptions& options, unsigned workers) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(cases, 1))));
  std::vector<SelftestSummary> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < cases; i += workers) run_case(i, seed, options, partial[w]);
      });
    }
  }
  SelftestSummary total;
  total.seed = seed;
  // Merge in case order so failure lists are independent of the worker count.
  std::vector<std::string> failures;
  for (const auto& p : partial) {
    total.cases += p.cases;
    total.comparisons += p.comparisons;
    total.mismatches += p.mismatches;
    total.invariant_failures += p.invariant_failures;
    failures.insert(failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(failures.begin(), failures.end());
  if (failures.size() > 10) failures.resize(10);
  total.failures = std::move(failures);
  return total;
}

}  // namespace toric
