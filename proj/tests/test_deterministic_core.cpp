#include <doctest.h>

#include <cmath>
#include <vector>

#include "ukc/deterministic_core.hpp"

using namespace ukc;

namespace {

Space line_metric() {
    return Space::finite({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
}

std::vector<Point> line_points(std::initializer_list<double> xs) {
    std::vector<Point> out;
    for (double x : xs) out.push_back(Point::euclidean({x}));
    return out;
}

}  // namespace

TEST_CASE("expected_point is the prob-weighted coordinate average") {
    const Space s = Space::euclidean(2);
    const UncertainPoint p{{Point::euclidean({0, 0}), Point::euclidean({2, 0})}, {0.5, 0.5}};
    CHECK(expected_point(p, s) == Point::euclidean({1, 0}));

    const Space line = Space::euclidean(1);
    const UncertainPoint q{{Point::euclidean({0.0}), Point::euclidean({4.0})}, {0.25, 0.75}};
    // weighted-sum oracle: 0.25*0 + 0.75*4
    CHECK(expected_point(q, line).coords[0] == doctest::Approx(0.25 * 0.0 + 0.75 * 4.0));

    const UncertainPoint certain{{Point::euclidean({0.3, -0.7})}, {1.0}};
    CHECK(expected_point(certain, s) == certain.locations[0]);

    CHECK_THROWS_AS(expected_point(certain, line_metric()), UnsupportedError);
}

TEST_CASE("weighted_one_median scans candidates and breaks ties low") {
    const Space m = line_metric();
    const std::vector<Point> all{Point::finite(0), Point::finite(1), Point::finite(2)};

    // candidate costs are 1.0, 1.0, 1.0: lowest index wins
    const UncertainPoint even{{Point::finite(0), Point::finite(2)}, {0.5, 0.5}};
    CHECK(weighted_one_median(even, all, m) == Point::finite(0));

    // costs 0.2, 1.0, 1.8
    const UncertainPoint skewed{{Point::finite(0), Point::finite(2)}, {0.9, 0.1}};
    CHECK(weighted_one_median(skewed, all, m) == Point::finite(0));

    const UncertainPoint certain{{Point::finite(1)}, {1.0}};
    CHECK(weighted_one_median(certain, all, m) == Point::finite(1));

    CHECK_THROWS_AS(weighted_one_median(even, {}, m), InputError);
}

TEST_CASE("weighted_one_median returns a global minimizer over the candidates") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Instance inst = generate_instance(3, 3, SpaceKind::finite, 7, seed);
        std::vector<Point> candidates;
        for (std::size_t i = 0; i < inst.space.size(); ++i)
            candidates.push_back(Point::finite(static_cast<int>(i)));
        for (const auto& p : inst.points) {
            const Point med = weighted_one_median(p, candidates, inst.space);
            const double med_cost = expected_distance(p, med, inst.space);
            for (const auto& c : candidates)
                CHECK(med_cost <= expected_distance(p, c, inst.space) + 1e-12);
        }
    }
}

TEST_CASE("deterministic_cost is the max over points of the min over centers") {
    const Space s = Space::euclidean(1);
    const auto pts = line_points({0, 1, 10});
    CHECK(deterministic_cost(pts, line_points({0, 10}), s) == doctest::Approx(1.0));
    CHECK(deterministic_cost(pts, pts, s) == 0.0);
    CHECK(deterministic_cost(line_points({3}), line_points({-1}), s) == doctest::Approx(4.0));
    CHECK_THROWS_AS(deterministic_cost({}, pts, s), InputError);
}

TEST_CASE("gonzalez seeds with the first point and takes farthest-first steps") {
    const Space s = Space::euclidean(1);
    const auto pts = line_points({0, 1, 10});

    const CenterSet two = gonzalez(pts, 2, s);
    CHECK(two == line_points({0, 10}));
    CHECK(deterministic_cost(pts, two, s) == doctest::Approx(1.0));

    const CenterSet one = gonzalez(pts, 1, s);
    CHECK(one == line_points({0}));
    CHECK(deterministic_cost(pts, one, s) == doctest::Approx(10.0));

    // k >= n covers everything at cost 0
    const CenterSet all = gonzalez(pts, 5, s);
    CHECK(deterministic_cost(pts, all, s) == 0.0);

    CHECK_THROWS_AS(gonzalez(pts, 0, s), InputError);
    CHECK_THROWS_AS(gonzalez({}, 1, s), InputError);
}

TEST_CASE("gonzalez stops early once every point is covered") {
    const Space s = Space::euclidean(1);
    const auto pts = line_points({1, 1, 1});
    CHECK(gonzalez(pts, 3, s).size() == 1);
}

TEST_CASE("exact_discrete_kcenter enumerates subsets and breaks ties lexicographically") {
    const Space s = Space::euclidean(1);
    const auto pts = line_points({0, 1, 10});

    // {0,10} and {1,10} both cost 1; the lexicographically first wins
    CHECK(exact_discrete_kcenter(pts, pts, 2, s) == line_points({0, 10}));

    CHECK(exact_discrete_kcenter(pts, pts, 3, s) == pts);
    CHECK(deterministic_cost(pts, exact_discrete_kcenter(pts, pts, 3, s), s) == 0.0);

    CHECK_THROWS_AS(exact_discrete_kcenter(pts, pts, 2, s, /*max_subsets=*/2), SizeError);
}

TEST_CASE("farthest-first stays within twice the exhaustive optimum") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const SpaceKind kind = seed % 2 == 0 ? SpaceKind::euclidean : SpaceKind::finite;
        const int n = 2 + static_cast<int>(seed % 11);  // up to 12 points
        const Instance inst =
            generate_instance(n, 1, kind, kind == SpaceKind::euclidean ? 2 : 8, seed);
        std::vector<Point> pts;
        for (const auto& p : inst.points) pts.push_back(p.locations[0]);
        for (int k = 1; k <= 3; ++k) {
            const double greedy = deterministic_cost(pts, gonzalez(pts, k, inst.space), inst.space);
            const double exact =
                deterministic_cost(pts, exact_discrete_kcenter(pts, pts, k, inst.space), inst.space);
            CHECK(greedy <= 2.0 * exact + 1e-9);
            CHECK(exact <= greedy + 1e-9);
        }
    }
}

TEST_CASE("combination_count matches Pascal identities and saturates") {
    CHECK(combination_count(3, 2) == 3);
    CHECK(combination_count(8, 3) == 56);
    CHECK(combination_count(20, 3) == 1140);
    CHECK(combination_count(5, 0) == 1);
    CHECK(combination_count(4, 5) == 0);
    CHECK(combination_count(200, 100) == UINT64_MAX);  // saturated
}

TEST_CASE("for_each_combination is lexicographic and complete") {
    std::vector<std::vector<std::size_t>> seen;
    for_each_combination(4, 2, [&](const std::vector<std::size_t>& idx) { seen.push_back(idx); });
    const std::vector<std::vector<std::size_t>> want{{0, 1}, {0, 2}, {0, 3},
                                                     {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == want);
}
