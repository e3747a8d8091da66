#pragma once

#include <optional>

#include "ukc/deterministic_core.hpp"

namespace ukc {

// The three assignment rules: nearest center by expected distance (ED),
// by distance from the expected point (EP, Euclidean only), or by distance
// from the point's own 1-center (OC, finite metrics only).
enum class Strategy { ED, EP, OC };

enum class DetSolver { gonzalez, exact_discrete };

enum class ProblemVersion { restricted, unrestricted, unassigned };

// Approximation slack of the plugged deterministic solver: farthest-first
// is within a factor 2 (eps = 1), exhaustive search over the whole finite
// space is exact (eps = 0).
inline double det_solver_eps(DetSolver s) { return s == DetSolver::gonzalez ? 1.0 : 0.0; }

struct Solution {
    CenterSet centers;
    Assignment assignment;
    std::optional<Strategy> strategy;
    double ecost = 0.0;
    double bound = 1.0;
    std::optional<DetSolver> det_solver;
    ProblemVersion version = ProblemVersion::restricted;
};

// All points of a finite space, in index order.
std::vector<Point> space_points(const Space& space);

// The certain stand-ins the pipelines cluster: expected points in a
// Euclidean space (ED and EP), per-point 1-centers over the whole space in
// a finite one (ED and OC).
std::vector<Point> surrogate_points(const Instance& instance, Strategy strategy);

// Per-point representatives the EP and OC assignment rules compare against
// centers; ED needs none and gets an empty vector.
std::vector<Point> assignment_representatives(const Instance& instance, Strategy strategy);

// Applies a strategy's argmin rule point by point; ties break to the lowest
// center index.
Assignment assign(const Instance& instance, std::span<const Point> centers, Strategy strategy);

// Same, with the representatives precomputed (callers that loop over many
// center sets avoid recomputing them).
Assignment assign_with_representatives(const Instance& instance, std::span<const Point> centers,
                                       Strategy strategy, std::span<const Point> representatives);

// 1-center rule for Euclidean instances: evaluate the expected point of every
// uncertain point as a candidate center and keep the cheapest. The first
// candidate alone is already within twice the optimum, so the minimum is too.
Solution solve_one_center(const Instance& instance);

// Replace-and-solve pipeline: build surrogates, run the deterministic solver
// on them, assign by the strategy, evaluate, attach the guaranteed bound.
// The version only affects which optimum the bound is stated against.
Solution solve_kcenter(const Instance& instance, int k, Strategy strategy, DetSolver det_solver,
                       ProblemVersion version);

// Guaranteed worst-case ratio for a pipeline configuration:
//   Euclidean ED -> 5 + eps          Euclidean EP -> 3 + eps
//   finite ED (unrestricted) -> 7 + 2 eps
//   finite OC (unrestricted) -> 5 + 2 eps
//   one-center (version == unassigned, Euclidean) -> 2
// Throws UnsupportedError on combinations with no stated guarantee.
double approximation_bound(std::optional<Strategy> strategy, SpaceKind kind, double eps,
                           ProblemVersion version);

const char* to_string(Strategy s);
const char* to_string(DetSolver s);
const char* to_string(ProblemVersion v);

}  // namespace ukc
