#include "ukc/oracles.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ukc {

namespace {

void append_unique(std::vector<Point>& out, const Point& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

void check_subsets(std::uint64_t subsets, std::uint64_t cap, const char* who) {
    if (subsets > cap) {
        std::ostringstream os;
        os << who << ": " << subsets << " center subsets exceed budget " << cap;
        throw SizeError(os.str());
    }
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace

std::vector<Point> default_candidates(const Instance& instance, Strategy strategy) {
    // In a finite space the solvers may output any space point, so the
    // candidate set is the whole space (which also makes the oracle optimum
    // exact). Locations and surrogates are index points, hence subsets of it.
    if (instance.space.kind == SpaceKind::finite) return space_points(instance.space);
    std::vector<Point> out;
    for (const auto& p : instance.points)
        for (const auto& loc : p.locations) append_unique(out, loc);
    for (const auto& s : surrogate_points(instance, strategy)) append_unique(out, s);
    return out;
}

std::vector<Point> grid_candidates(const Instance& instance, int per_axis) {
    if (instance.space.kind != SpaceKind::euclidean)
        throw UnsupportedError("grid_candidates requires a Euclidean space");
    if (per_axis < 2) throw InputError("grid_candidates: per_axis must be >= 2");
    const int dim = instance.space.dim;

    std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
    std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
    for (const auto& p : instance.points)
        for (const auto& loc : p.locations)
            for (int d = 0; d < dim; ++d) {
                lo[d] = std::min(lo[d], loc.coords[d]);
                hi[d] = std::max(hi[d], loc.coords[d]);
            }

    const std::uint64_t total = saturating_pow(per_axis, dim);
    if (total > 10'000'000) throw SizeError("grid_candidates: grid too large for this dimension");

    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> step(dim, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<double> coords(dim);
        for (int d = 0; d < dim; ++d)
            coords[d] = lo[d] + (hi[d] - lo[d]) * step[d] / (per_axis - 1);
        out.push_back(Point::euclidean(std::move(coords)));
        for (int d = dim; d-- > 0;) {
            if (++step[d] < per_axis) break;
            step[d] = 0;
        }
    }
    return out;
}

Solution opt_restricted(const Instance& instance, int k, Strategy strategy,
                        std::span<const Point> candidates, const OracleBudget& budget) {
    if (k < 1) throw InputError("opt_restricted: k must be >= 1");
    if (candidates.empty()) throw InputError("opt_restricted: empty candidates");
    const std::size_t m = candidates.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), m);
    check_subsets(combination_count(m, kk), budget.max_center_subsets, "opt_restricted");

    const auto reps = assignment_representatives(instance, strategy);

    Solution best;
    best.strategy = strategy;
    best.version = ProblemVersion::restricted;
    best.ecost = std::numeric_limits<double>::infinity();
    CenterSet current(kk);
    for_each_combination(m, kk, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < kk; ++i) current[i] = candidates[idx[i]];
        Assignment a = assign_with_representatives(instance, current, strategy, reps);
        const double ec = ecost_assigned(instance, current, a);
        if (ec < best.ecost) {
            best.ecost = ec;
            best.centers = current;
            best.assignment = std::move(a);
        }
    });
    return best;
}

Solution opt_unrestricted(const Instance& instance, int k, std::span<const Point> candidates,
                          const OracleBudget& budget) {
    if (k < 1) throw InputError("opt_unrestricted: k must be >= 1");
    if (candidates.empty()) throw InputError("opt_unrestricted: empty candidates");
    const std::size_t m = candidates.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), m);
    const std::size_t n = instance.n();
    check_subsets(combination_count(m, kk), budget.max_center_subsets, "opt_unrestricted");
    const std::uint64_t assigns = saturating_pow(kk, n);
    if (assigns > budget.max_assignments) {
        std::ostringstream os;
        os << "opt_unrestricted: " << assigns << " assignments exceed budget "
           << budget.max_assignments;
        throw SizeError(os.str());
    }

    Solution best;
    best.version = ProblemVersion::unrestricted;
    best.ecost = std::numeric_limits<double>::infinity();

    CenterSet current(kk);
    std::vector<std::vector<DiscreteDist>> dist(n);  // dist[i][j]: point i to center j
    std::vector<const DiscreteDist*> picked(n);
    Assignment a;
    a.target.assign(n, 0);

    for_each_combination(m, kk, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < kk; ++i) current[i] = candidates[idx[i]];
        for (std::size_t i = 0; i < n; ++i) {
            dist[i].clear();
            for (std::size_t j = 0; j < kk; ++j)
                dist[i].push_back(
                    distance_distribution(instance.points[i], current[j], instance.space));
        }
        std::fill(a.target.begin(), a.target.end(), 0);
        for (std::uint64_t t = 0; t < assigns; ++t) {
            for (std::size_t i = 0; i < n; ++i) picked[i] = &dist[i][a.target[i]];
            const double ec = expected_max(std::span<const DiscreteDist* const>(picked));
            if (ec < best.ecost) {
                best.ecost = ec;
                best.centers = current;
                best.assignment = a;
            }
            for (std::size_t i = n; i-- > 0;) {  // odometer over center-index tuples
                if (++a.target[i] < static_cast<int>(kk)) break;
                a.target[i] = 0;
            }
        }
    });
    return best;
}

Solution opt_unassigned(const Instance& instance, int k, std::span<const Point> candidates,
                        const OracleBudget& budget) {
    if (k < 1) throw InputError("opt_unassigned: k must be >= 1");
    if (candidates.empty()) throw InputError("opt_unassigned: empty candidates");
    const std::size_t m = candidates.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), m);
    check_subsets(combination_count(m, kk), budget.max_center_subsets, "opt_unassigned");

    Solution best;
    best.version = ProblemVersion::unassigned;
    best.ecost = std::numeric_limits<double>::infinity();
    CenterSet current(kk);
    for_each_combination(m, kk, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < kk; ++i) current[i] = candidates[idx[i]];
        const double ec = ecost_unassigned(instance, current);
        if (ec < best.ecost) {
            best.ecost = ec;
            best.centers = current;
        }
    });
    return best;
}

}  // namespace ukc
