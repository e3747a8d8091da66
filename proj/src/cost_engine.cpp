#include "ukc/cost_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace ukc {

DiscreteDist DiscreteDist::from_samples(std::vector<double> values, std::vector<double> probs) {
    if (values.empty() || values.size() != probs.size())
        throw InputError("distribution needs equal-length nonempty values and probs");
    for (double p : probs)
        if (!(p >= 0.0)) throw InputError("distribution probabilities must be >= 0");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    DiscreteDist d;
    d.values.reserve(values.size());
    d.probs.reserve(values.size());
    for (std::size_t idx : order) {
        if (!d.values.empty() && values[idx] == d.values.back()) {
            d.probs.back() += probs[idx];
        } else {
            d.values.push_back(values[idx]);
            d.probs.push_back(probs[idx]);
        }
    }
    return d;
}

double DiscreteDist::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) m += values[i] * probs[i];
    return m;
}

double expected_distance(const UncertainPoint& p, const Point& q, const Space& space) {
    double e = 0.0;
    for (std::size_t j = 0; j < p.locations.size(); ++j)
        e += p.probs[j] * distance(space, p.locations[j], q);
    return e;
}

DiscreteDist distance_distribution(const UncertainPoint& p, const Point& q, const Space& space) {
    std::vector<double> vals(p.locations.size());
    for (std::size_t j = 0; j < p.locations.size(); ++j)
        vals[j] = distance(space, p.locations[j], q);
    return DiscreteDist::from_samples(std::move(vals), p.probs);
}

double expected_max(std::span<const DiscreteDist* const> dists) {
    if (dists.empty()) throw InputError("expected_max: empty distribution list");
    if (dists.size() == 1) return dists[0]->mean();

    std::vector<double> vals;
    std::size_t total = 0;
    for (const auto* d : dists) total += d->values.size();
    vals.reserve(total);
    for (const auto* d : dists) vals.insert(vals.end(), d->values.begin(), d->values.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    std::vector<double> cdf(vals.size(), 1.0);
    for (const auto* d : dists) {
        double acc = 0.0;
        std::size_t j = 0;
        for (std::size_t t = 0; t < vals.size(); ++t) {
            while (j < d->values.size() && d->values[j] <= vals[t]) acc += d->probs[j++];
            cdf[t] *= acc;
        }
    }

    double e = 0.0;
    double prev = 0.0;
    for (std::size_t t = 0; t < vals.size(); ++t) {
        e += vals[t] * (cdf[t] - prev);
        prev = cdf[t];
    }
    return e;
}

double expected_max(std::span<const DiscreteDist> dists) {
    std::vector<const DiscreteDist*> ptrs(dists.size());
    for (std::size_t i = 0; i < dists.size(); ++i) ptrs[i] = &dists[i];
    return expected_max(std::span<const DiscreteDist* const>(ptrs));
}

namespace {

void check_assignment(const Instance& instance, std::size_t k, const Assignment& a) {
    if (a.target.size() != instance.n())
        throw InputError("assignment length does not match the number of points");
    for (std::size_t i = 0; i < a.target.size(); ++i) {
        if (a.target[i] < 0 || a.target[i] >= static_cast<int>(k)) {
            std::ostringstream os;
            os << "assignment target " << a.target[i] << " out of range [0," << k << ") at point "
               << i;
            throw InputError(os.str());
        }
    }
}

double min_center_distance(const Space& space, const Point& loc, std::span<const Point> centers) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : centers) best = std::min(best, distance(space, loc, c));
    return best;
}

}  // namespace

double ecost_assigned(const Instance& instance, std::span<const Point> centers,
                      const Assignment& assignment) {
    if (centers.empty()) throw InputError("ecost_assigned: empty centers");
    check_assignment(instance, centers.size(), assignment);
    std::vector<DiscreteDist> dists;
    dists.reserve(instance.n());
    for (std::size_t i = 0; i < instance.n(); ++i)
        dists.push_back(
            distance_distribution(instance.points[i], centers[assignment.target[i]], instance.space));
    return expected_max(std::span<const DiscreteDist>(dists));
}

double ecost_unassigned(const Instance& instance, std::span<const Point> centers) {
    if (centers.empty()) throw InputError("ecost_unassigned: empty centers");
    std::vector<DiscreteDist> dists;
    dists.reserve(instance.n());
    for (const auto& p : instance.points) {
        std::vector<double> vals(p.locations.size());
        for (std::size_t j = 0; j < p.locations.size(); ++j)
            vals[j] = min_center_distance(instance.space, p.locations[j], centers);
        dists.push_back(DiscreteDist::from_samples(std::move(vals), p.probs));
    }
    return expected_max(std::span<const DiscreteDist>(dists));
}

double ecost_enumerated(const Instance& instance, std::span<const Point> centers,
                        const Assignment* assignment, std::uint64_t cap) {
    if (centers.empty()) throw InputError("ecost_enumerated: empty centers");
    if (assignment != nullptr) check_assignment(instance, centers.size(), *assignment);

    // per-location distances up front; realizations then cost O(n) each
    const std::size_t n = instance.n();
    std::vector<std::vector<double>> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = instance.points[i];
        dist[i].resize(p.support());
        for (std::size_t j = 0; j < p.support(); ++j) {
            dist[i][j] = assignment != nullptr
                             ? distance(instance.space, p.locations[j],
                                        centers[assignment->target[i]])
                             : min_center_distance(instance.space, p.locations[j], centers);
        }
    }

    double total = 0.0;
    for_each_realization(instance, cap, [&](const Realization& r) {
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i) mx = std::max(mx, dist[i][r.choice[i]]);
        total += r.prob * mx;
    });
    return total;
}

}  // namespace ukc
