#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ukc/errors.hpp"
#include "ukc/metric_space.hpp"

namespace ukc {

// Probability sums must land within this absolute slack of 1.
inline constexpr double kProbSlack = 1e-9;

// Enumeration refuses instances with more realizations than this.
inline constexpr std::uint64_t kDefaultRealizationCap = 1'000'000;

// One uncertain point: a discrete distribution over locations. Probabilities
// are kept exactly as given (never renormalized) so the product formula for
// realization probabilities matches the input bit for bit.
struct UncertainPoint {
    std::vector<Point> locations;
    std::vector<double> probs;

    std::size_t support() const { return locations.size(); }  // z_i

    bool operator==(const UncertainPoint&) const = default;
};

struct Instance {
    Space space;
    std::vector<UncertainPoint> points;

    std::size_t n() const { return points.size(); }
    std::size_t max_support() const {
        std::size_t z = 0;
        for (const auto& p : points) z = std::max(z, p.support());
        return z;
    }

    bool operator==(const Instance&) const = default;
};

// One location choice per uncertain point; prob is the product of the
// chosen probabilities.
struct Realization {
    std::vector<int> choice;
    double prob = 1.0;
};

// Parses the instance JSON schema:
//   {"space": {"kind":"euclidean","dim":d} | {"kind":"finite","matrix":[[...]]},
//    "points": [{"locations":[...], "probs":[...]}, ...]}
// where a Euclidean location is an array of d reals and a finite location is
// an integer index. Throws InputError with the point index and field path.
Instance parse_instance(const std::string& text);
Instance parse_instance(std::istream& in);

// Emits the same schema with reals in shortest round-trip decimal form;
// parse_instance(emit_instance(i)) reproduces i exactly.
std::string emit_instance(const Instance& instance);

// Deterministic function of the seed. Euclidean locations are uniform in
// [0,1]^dim; probabilities are drawn uniform and normalized. Finite spaces
// embed dim_or_m points in the unit square and take their pairwise
// Euclidean distances as the matrix, so the metric axioms hold by
// construction; locations are uniform indices.
Instance generate_instance(int n, int z, SpaceKind kind, int dim_or_m, std::uint64_t seed);

// Product of the support sizes, saturating at uint64 max.
std::uint64_t realization_count(const Instance& instance);

// All realizations in lexicographic choice order; their probs sum to 1
// within kProbSlack. Refuses with SizeError above the cap.
std::vector<Realization> enumerate_realizations(const Instance& instance,
                                                std::uint64_t cap = kDefaultRealizationCap);

// Streaming form of enumerate_realizations, same order and cap rule.
template <typename F>
void for_each_realization(const Instance& instance, std::uint64_t cap, F&& visit);

// fnv1a-64 over the emitted JSON, as a 16-digit hex string.
std::string instance_digest(const Instance& instance);

// fnv1a-64 of arbitrary bytes as a 16-digit hex string.
std::string digest_string(std::string_view bytes);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t x);

// Uniform generator behind generate_instance and the verification suites.
// mt19937_64 plus explicit scaling gives identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    // uniform in (0, 1]
    double uniform01_pos() { return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53; }
    // uniform integer in [0, n); n >= 1
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  private:
    std::mt19937_64 gen_;
};

namespace detail {
void throw_realization_cap(std::uint64_t total, std::uint64_t cap);
}

template <typename F>
void for_each_realization(const Instance& instance, std::uint64_t cap, F&& visit) {
    const std::uint64_t total = realization_count(instance);
    if (total > cap) detail::throw_realization_cap(total, cap);
    const std::size_t n = instance.n();
    Realization r;
    r.choice.assign(n, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        double p = 1.0;
        for (std::size_t i = 0; i < n; ++i) p *= instance.points[i].probs[r.choice[i]];
        r.prob = p;
        visit(static_cast<const Realization&>(r));
        for (std::size_t i = n; i-- > 0;) {  // odometer, rightmost digit fastest
            if (++r.choice[i] < static_cast<int>(instance.points[i].support())) break;
            r.choice[i] = 0;
        }
    }
}

}  // namespace ukc
