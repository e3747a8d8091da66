#pragma once

#include "ukc/uncertain_solver.hpp"

namespace ukc {

// Caps for the exhaustive optimum providers; they exist to certify bounds on
// desk-scale instances, not to scale.
struct OracleBudget {
    std::uint64_t max_center_subsets = 1'000'000;
    std::uint64_t max_assignments = 1'000'000;
    std::uint64_t max_realizations = 1'000'000;
};

// All locations of all uncertain points followed by the strategy's surrogate
// points, deduplicated, in first-seen order. Every point the solver can
// output is in this set, so its solutions are feasible oracle choices.
std::vector<Point> default_candidates(const Instance& instance, Strategy strategy);

// Uniform grid over the bounding box of the instance's locations (Euclidean
// only). The unassigned 1-center optimum is 1-Lipschitz in the center, so a
// fine grid bounds it to within the cell diagonal.
std::vector<Point> grid_candidates(const Instance& instance, int per_axis = 201);

// Minimum ecost over all k-subsets of candidates with the assignment forced
// by the strategy. Ties go to the lexicographically first subset.
Solution opt_restricted(const Instance& instance, int k, Strategy strategy,
                        std::span<const Point> candidates, const OracleBudget& budget = {});

// Minimum ecost over all k-subsets and all k^n assignments (the expected max
// couples the points, so per-point greedy assignment is not valid).
Solution opt_unrestricted(const Instance& instance, int k, std::span<const Point> candidates,
                          const OracleBudget& budget = {});

// Minimum unassigned ecost over all k-subsets of candidates.
Solution opt_unassigned(const Instance& instance, int k, std::span<const Point> candidates,
                        const OracleBudget& budget = {});

}  // namespace ukc
