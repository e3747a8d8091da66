#include "ukc/deterministic_core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ukc {

Point expected_point(const UncertainPoint& p, const Space& space) {
    if (space.kind != SpaceKind::euclidean)
        throw UnsupportedError("expected point requires a Euclidean space");
    std::vector<double> coords(space.dim, 0.0);
    for (std::size_t j = 0; j < p.locations.size(); ++j) {
        const auto& loc = p.locations[j];
        if (static_cast<int>(loc.coords.size()) != space.dim)
            throw InputError("expected_point: location dimension mismatch");
        for (int d = 0; d < space.dim; ++d) coords[d] += p.probs[j] * loc.coords[d];
    }
    return Point::euclidean(std::move(coords));
}

Point weighted_one_median(const UncertainPoint& p, std::span<const Point> candidates,
                          const Space& space) {
    if (candidates.empty()) throw InputError("weighted_one_median: empty candidates");
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const double cost = expected_distance(p, candidates[c], space);
        if (cost < best_cost) {
            best_cost = cost;
            best = c;
        }
    }
    return candidates[best];
}

double deterministic_cost(std::span<const Point> points, std::span<const Point> centers,
                          const Space& space) {
    if (points.empty() || centers.empty())
        throw InputError("deterministic_cost: empty points or centers");
    double worst = 0.0;
    for (const auto& p : points) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& c : centers) nearest = std::min(nearest, distance(space, p, c));
        worst = std::max(worst, nearest);
    }
    return worst;
}

CenterSet gonzalez(std::span<const Point> points, int k, const Space& space) {
    if (points.empty()) throw InputError("gonzalez: empty points");
    if (k < 1) throw InputError("gonzalez: k must be >= 1");

    CenterSet centers{points[0]};
    std::vector<double> dist_to_set(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        dist_to_set[i] = distance(space, points[i], points[0]);

    while (static_cast<int>(centers.size()) < k) {
        std::size_t farthest = 0;
        for (std::size_t i = 1; i < points.size(); ++i)
            if (dist_to_set[i] > dist_to_set[farthest]) farthest = i;
        if (dist_to_set[farthest] <= 0.0) break;  // everything already covered
        centers.push_back(points[farthest]);
        for (std::size_t i = 0; i < points.size(); ++i)
            dist_to_set[i] = std::min(dist_to_set[i], distance(space, points[i], points[farthest]));
    }
    return centers;
}

CenterSet exact_discrete_kcenter(std::span<const Point> points, std::span<const Point> candidates,
                                 int k, const Space& space, std::uint64_t max_subsets) {
    if (points.empty()) throw InputError("exact_discrete_kcenter: empty points");
    if (candidates.empty()) throw InputError("exact_discrete_kcenter: empty candidates");
    if (k < 1) throw InputError("exact_discrete_kcenter: k must be >= 1");

    const std::size_t m = candidates.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), m);
    const std::uint64_t subsets = combination_count(m, kk);
    if (subsets > max_subsets) {
        std::ostringstream os;
        os << "exact_discrete_kcenter: " << subsets << " candidate subsets exceed cap "
           << max_subsets;
        throw SizeError(os.str());
    }

    CenterSet best;
    double best_cost = std::numeric_limits<double>::infinity();
    CenterSet current(kk);
    for_each_combination(m, kk, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < kk; ++i) current[i] = candidates[idx[i]];
        const double cost = deterministic_cost(points, current, space);
        if (cost < best_cost) {
            best_cost = cost;
            best = current;
        }
    });
    return best;
}

std::uint64_t combination_count(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t factor = n - k + i;
        if (result > UINT64_MAX / factor) return UINT64_MAX;
        result = result * factor / i;  // divisible at each step: C(n-k+i, i)
    }
    return result;
}

}  // namespace ukc
