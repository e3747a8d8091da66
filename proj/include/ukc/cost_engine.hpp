#pragma once

#include <span>
#include <vector>

#include "ukc/uncertain_model.hpp"

namespace ukc {

// Relative tolerance for evaluator cross-checks.
inline constexpr double kEvalRelTol = 1e-9;

// Distribution of one nonnegative random distance. Values are sorted
// ascending and distinct; equal samples are merged with their probs summed
// (exact floating-point equality keeps the CDF well defined).
struct DiscreteDist {
    std::vector<double> values;
    std::vector<double> probs;

    static DiscreteDist from_samples(std::vector<double> values, std::vector<double> probs);

    double mean() const;
};

// target[i] = index of the center point P_i is assigned to.
struct Assignment {
    std::vector<int> target;

    bool operator==(const Assignment&) const = default;
};

// Sum over locations of prob * distance to q.
double expected_distance(const UncertainPoint& p, const Point& q, const Space& space);

// Distribution of the random distance from p to q.
DiscreteDist distance_distribution(const UncertainPoint& p, const Point& q, const Space& space);

// E[max_i X_i] for independent X_i, via the sorted union V of all values and
// the CDF product F(v) = prod_i P(X_i <= v):
//   E[max] = sum_t v_t * (F(v_t) - F(v_{t-1}))
// Equals the realization-enumeration sum whenever both are computable.
double expected_max(std::span<const DiscreteDist* const> dists);
double expected_max(std::span<const DiscreteDist> dists);

// Expected max distance from each point to its assigned center.
double ecost_assigned(const Instance& instance, std::span<const Point> centers,
                      const Assignment& assignment);

// Expected max distance from each point to its nearest center. The per-point
// min over centers is taken per location, which is valid because the nearest
// center is a function of the realized location alone.
double ecost_unassigned(const Instance& instance, std::span<const Point> centers);

// Literal sum over all realizations; the cross-check oracle for the two exact
// evaluators above. Computes the assigned cost when assignment is non-null.
double ecost_enumerated(const Instance& instance, std::span<const Point> centers,
                        const Assignment* assignment = nullptr,
                        std::uint64_t cap = kDefaultRealizationCap);

}  // namespace ukc
