#include "ukc/uncertain_solver.hpp"

#include <limits>

namespace ukc {

std::vector<Point> space_points(const Space& space) {
    if (space.kind != SpaceKind::finite)
        throw UnsupportedError("space_points requires a finite space");
    std::vector<Point> pts;
    pts.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        pts.push_back(Point::finite(static_cast<int>(i)));
    return pts;
}

std::vector<Point> surrogate_points(const Instance& instance, Strategy strategy) {
    std::vector<Point> out;
    out.reserve(instance.n());
    if (instance.space.kind == SpaceKind::euclidean) {
        if (strategy == Strategy::OC)
            throw UnsupportedError("1-center assignment is restricted to finite metric spaces");
        for (const auto& p : instance.points) out.push_back(expected_point(p, instance.space));
    } else {
        if (strategy == Strategy::EP)
            throw UnsupportedError("expected-point assignment requires Euclidean space");
        const auto candidates = space_points(instance.space);
        for (const auto& p : instance.points)
            out.push_back(weighted_one_median(p, candidates, instance.space));
    }
    return out;
}

std::vector<Point> assignment_representatives(const Instance& instance, Strategy strategy) {
    switch (strategy) {
        case Strategy::ED:
            return {};
        case Strategy::EP: {
            if (instance.space.kind != SpaceKind::euclidean)
                throw UnsupportedError("expected-point assignment requires Euclidean space");
            std::vector<Point> reps;
            reps.reserve(instance.n());
            for (const auto& p : instance.points)
                reps.push_back(expected_point(p, instance.space));
            return reps;
        }
        case Strategy::OC: {
            if (instance.space.kind != SpaceKind::finite)
                throw UnsupportedError("1-center assignment is restricted to finite metric spaces");
            const auto candidates = space_points(instance.space);
            std::vector<Point> reps;
            reps.reserve(instance.n());
            for (const auto& p : instance.points)
                reps.push_back(weighted_one_median(p, candidates, instance.space));
            return reps;
        }
    }
    throw InputError("unknown strategy");
}

Assignment assign_with_representatives(const Instance& instance, std::span<const Point> centers,
                                       Strategy strategy, std::span<const Point> representatives) {
    if (centers.empty()) throw InputError("assign: empty centers");
    if (strategy != Strategy::ED && representatives.size() != instance.n())
        throw InputError("assign: representatives length does not match the instance");

    Assignment a;
    a.target.resize(instance.n());
    for (std::size_t i = 0; i < instance.n(); ++i) {
        int best = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < centers.size(); ++j) {
            const double cost =
                strategy == Strategy::ED
                    ? expected_distance(instance.points[i], centers[j], instance.space)
                    : distance(instance.space, representatives[i], centers[j]);
            if (cost < best_cost) {
                best_cost = cost;
                best = static_cast<int>(j);
            }
        }
        a.target[i] = best;
    }
    return a;
}

Assignment assign(const Instance& instance, std::span<const Point> centers, Strategy strategy) {
    const auto reps = assignment_representatives(instance, strategy);
    return assign_with_representatives(instance, centers, strategy, reps);
}

Solution solve_one_center(const Instance& instance) {
    if (instance.space.kind != SpaceKind::euclidean)
        throw UnsupportedError("one-center solve requires a Euclidean space");

    CenterSet best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (const auto& p : instance.points) {
        CenterSet candidate{expected_point(p, instance.space)};
        const double cost = ecost_unassigned(instance, candidate);
        if (cost < best_cost) {
            best_cost = cost;
            best = std::move(candidate);
        }
    }

    Solution s;
    s.centers = std::move(best);
    s.assignment.target.assign(instance.n(), 0);
    s.ecost = best_cost;
    s.version = ProblemVersion::unassigned;
    s.bound = approximation_bound(std::nullopt, instance.space.kind, 0.0, s.version);
    return s;
}

Solution solve_kcenter(const Instance& instance, int k, Strategy strategy, DetSolver det_solver,
                       ProblemVersion version) {
    if (k < 1) throw InputError("solve_kcenter: k must be >= 1");
    if (version == ProblemVersion::unassigned)
        throw UnsupportedError(
            "solve_kcenter handles the assigned versions; use solve_one_center for the "
            "unassigned 1-center");

    Solution s;
    s.strategy = strategy;
    s.det_solver = det_solver;
    s.version = version;
    s.bound = approximation_bound(strategy, instance.space.kind, det_solver_eps(det_solver), version);

    const auto surrogates = surrogate_points(instance, strategy);
    if (det_solver == DetSolver::gonzalez) {
        s.centers = gonzalez(surrogates, k, instance.space);
    } else if (instance.space.kind == SpaceKind::finite) {
        // exhausting the whole finite space makes the solver exactly optimal
        const auto candidates = space_points(instance.space);
        s.centers = exact_discrete_kcenter(surrogates, candidates, k, instance.space);
    } else {
        s.centers = exact_discrete_kcenter(surrogates, surrogates, k, instance.space);
    }
    s.assignment = assign(instance, s.centers, strategy);
    s.ecost = ecost_assigned(instance, s.centers, s.assignment);
    return s;
}

double approximation_bound(std::optional<Strategy> strategy, SpaceKind kind, double eps,
                           ProblemVersion version) {
    if (eps < 0.0) throw InputError("approximation_bound: eps must be >= 0");
    if (version == ProblemVersion::unassigned) {
        if (kind != SpaceKind::euclidean)
            throw UnsupportedError("the one-center guarantee is stated for Euclidean spaces");
        return 2.0;
    }
    if (!strategy.has_value())
        throw UnsupportedError("assigned versions need an assignment strategy");
    if (kind == SpaceKind::euclidean) {
        switch (*strategy) {
            case Strategy::ED:
                return 5.0 + eps;
            case Strategy::EP:
                return 3.0 + eps;
            case Strategy::OC:
                throw UnsupportedError("1-center assignment is restricted to finite metric spaces");
        }
        throw InputError("unknown strategy");
    }
    if (*strategy == Strategy::EP)
        throw UnsupportedError("expected-point assignment requires Euclidean space");
    if (version != ProblemVersion::unrestricted)
        throw UnsupportedError(
            "finite-metric guarantees are stated against the unrestricted optimum only");
    return *strategy == Strategy::ED ? 7.0 + 2.0 * eps : 5.0 + 2.0 * eps;
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::ED: return "ed";
        case Strategy::EP: return "ep";
        case Strategy::OC: return "oc";
    }
    return "?";
}

const char* to_string(DetSolver s) {
    return s == DetSolver::gonzalez ? "gonzalez" : "exact";
}

const char* to_string(ProblemVersion v) {
    switch (v) {
        case ProblemVersion::restricted: return "restricted";
        case ProblemVersion::unrestricted: return "unrestricted";
        case ProblemVersion::unassigned: return "unassigned";
    }
    return "?";
}

}  // namespace ukc
