#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ukc {

enum class SpaceKind { euclidean, finite };

// Absolute slack used by every metric inequality check.
inline constexpr double kMetricSlack = 1e-9;

// A location: coordinates in a Euclidean space, or a row index of a finite
// distance matrix. Which representation is active is decided by the Space
// the point is used with.
struct Point {
    std::vector<double> coords;  // euclidean kind
    int index = -1;              // finite kind

    static Point euclidean(std::vector<double> c) { return Point{std::move(c), -1}; }
    static Point finite(int i) { return Point{{}, i}; }

    bool operator==(const Point&) const = default;
};

struct Space {
    SpaceKind kind = SpaceKind::euclidean;
    int dim = 0;                              // euclidean only
    std::vector<std::vector<double>> matrix;  // finite only, m x m

    static Space euclidean(int dim) { return Space{SpaceKind::euclidean, dim, {}}; }
    static Space finite(std::vector<std::vector<double>> m) {
        return Space{SpaceKind::finite, 0, std::move(m)};
    }

    // Number of points of a finite space.
    std::size_t size() const { return matrix.size(); }

    bool operator==(const Space&) const = default;
};

struct MetricViolation {
    enum class Axiom { dimension, shape, nonfinite, diagonal, symmetry, negativity, triangle };
    Axiom axiom;
    int i = -1;
    int j = -1;
    int k = -1;  // witness index for triangle violations

    std::string describe() const;
};

// The metric d. Throws InputError on dimension mismatch or an index outside
// the matrix.
double distance(const Space& space, const Point& a, const Point& b);

// Empty result means every metric axiom holds within kMetricSlack.
std::vector<MetricViolation> validate_space(const Space& space);

}  // namespace ukc
