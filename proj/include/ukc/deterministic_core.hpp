#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ukc/cost_engine.hpp"

namespace ukc {

using CenterSet = std::vector<Point>;

// exact_discrete_kcenter refuses instances with more candidate subsets.
inline constexpr std::uint64_t kDefaultSubsetCap = 1'000'000;

// Probability-weighted coordinate average. Euclidean spaces only.
Point expected_point(const UncertainPoint& p, const Space& space);

// The candidate minimizing the expected distance to p; ties break to the
// lowest candidate index.
Point weighted_one_median(const UncertainPoint& p, std::span<const Point> candidates,
                          const Space& space);

// max over points of min over centers.
double deterministic_cost(std::span<const Point> points, std::span<const Point> centers,
                          const Space& space);

// Farthest-first traversal. Seeds with points[0], then repeatedly adds the
// point farthest from the chosen set (ties to the lowest index), stopping
// early once every point is covered at distance 0. The result is within
// twice the optimal k-center cost. O(nk) distance evaluations.
CenterSet gonzalez(std::span<const Point> points, int k, const Space& space);

// The k-subset of candidates minimizing deterministic_cost, by exhaustive
// enumeration; ties go to the lexicographically smallest index tuple.
CenterSet exact_discrete_kcenter(std::span<const Point> points, std::span<const Point> candidates,
                                 int k, const Space& space,
                                 std::uint64_t max_subsets = kDefaultSubsetCap);

// C(n, k), saturating at uint64 max.
std::uint64_t combination_count(std::uint64_t n, std::uint64_t k);

// Visits the k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace ukc
