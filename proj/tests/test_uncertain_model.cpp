#include <doctest.h>

#include <sstream>
#include <string>

#include "ukc/uncertain_model.hpp"

using namespace ukc;

TEST_CASE("parse_instance accepts a minimal well-formed instance") {
    const Instance inst = parse_instance(
        R"({"space":{"kind":"euclidean","dim":1},"points":[{"locations":[[0.0],[2.0]],"probs":[0.5,0.5]}]})");
    CHECK(inst.n() == 1);
    CHECK(inst.max_support() == 2);
    CHECK(inst.space.kind == SpaceKind::euclidean);
    CHECK(inst.points[0].locations[1].coords[0] == 2.0);

    std::istringstream stream(
        R"({"space":{"kind":"euclidean","dim":1},"points":[{"locations":[[0.0],[2.0]],"probs":[0.5,0.5]}]})");
    CHECK(parse_instance(stream) == inst);
}

TEST_CASE("parse_instance rejects probability sums out of tolerance") {
    const std::string text =
        R"({"space":{"kind":"euclidean","dim":1},"points":[{"locations":[[0.0],[2.0]],"probs":[0.5,0.6]}]})";
    CHECK_THROWS_WITH_AS(parse_instance(text),
                         "probability sum 1.1 out of tolerance at points[0]", InputError);
}

TEST_CASE("parse_instance rejects invalid finite matrices naming the axiom") {
    const std::string text =
        R"({"space":{"kind":"finite","matrix":[[0,1,3],[1,0,1],[3,1,0]]},"points":[{"locations":[0],"probs":[1.0]}]})";
    try {
        parse_instance(text);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("triangle") != std::string::npos);
    }
}

TEST_CASE("parse_instance reports the field path of bad locations") {
    const std::string text =
        R"({"space":{"kind":"finite","matrix":[[0,1],[1,0]]},"points":[{"locations":[0,5],"probs":[0.5,0.5]}]})";
    try {
        parse_instance(text);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        const std::string what = e.what();
        CHECK(what.find("points[0].locations[1]") != std::string::npos);
        CHECK(what.find("out of range") != std::string::npos);
    }
}

TEST_CASE("parse_instance rejects malformed JSON and wrong shapes") {
    CHECK_THROWS_AS(parse_instance("{nope"), InputError);
    CHECK_THROWS_AS(parse_instance("[]"), InputError);
    CHECK_THROWS_AS(parse_instance(R"({"space":{"kind":"euclidean","dim":1},"points":[]})"),
                    InputError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"space":{"kind":"euclidean","dim":2},"points":[{"locations":[[0.0]],"probs":[1.0]}]})"),
        InputError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"space":{"kind":"euclidean","dim":1},"points":[{"locations":[[0.0]],"probs":[-1.0]}]})"),
        InputError);
}

TEST_CASE("generate_instance is a deterministic function of the seed") {
    const Instance a = generate_instance(3, 2, SpaceKind::euclidean, 2, 7);
    const Instance b = generate_instance(3, 2, SpaceKind::euclidean, 2, 7);
    CHECK(a == b);
    CHECK(emit_instance(a) == emit_instance(b));
    const Instance c = generate_instance(3, 2, SpaceKind::euclidean, 2, 8);
    CHECK(a != c);
}

TEST_CASE("generated instances round-trip through emit and parse exactly") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Instance e = generate_instance(4, 3, SpaceKind::euclidean, 3, seed);
        CHECK(parse_instance(emit_instance(e)) == e);
        const Instance f = generate_instance(4, 3, SpaceKind::finite, 6, seed);
        CHECK(parse_instance(emit_instance(f)) == f);
        CHECK(validate_space(f.space).empty());
    }
}

TEST_CASE("a single certain point has probability exactly 1") {
    const Instance inst = generate_instance(1, 1, SpaceKind::euclidean, 2, 42);
    REQUIRE(inst.points[0].probs.size() == 1);
    CHECK(inst.points[0].probs[0] == 1.0);
}

TEST_CASE("generate_instance rejects invalid sizes") {
    CHECK_THROWS_AS(generate_instance(0, 1, SpaceKind::euclidean, 2, 1), InputError);
    CHECK_THROWS_AS(generate_instance(1, 0, SpaceKind::euclidean, 2, 1), InputError);
    CHECK_THROWS_AS(generate_instance(1, 1, SpaceKind::euclidean, 0, 1), InputError);
}

TEST_CASE("enumeration is lexicographic and complete") {
    Instance inst;
    inst.space = Space::euclidean(1);
    inst.points.push_back({{Point::euclidean({0.0}), Point::euclidean({2.0})}, {0.25, 0.75}});
    inst.points.push_back({{Point::euclidean({1.0})}, {1.0}});

    const auto rs = enumerate_realizations(inst);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].choice == std::vector<int>{0, 0});
    CHECK(rs[0].prob == doctest::Approx(0.25));
    CHECK(rs[1].choice == std::vector<int>{1, 0});
    CHECK(rs[1].prob == doctest::Approx(0.75));
}

TEST_CASE("enumeration counts the product of supports and its probs sum to 1") {
    const Instance inst = generate_instance(3, 3, SpaceKind::euclidean, 2, 11);
    CHECK(realization_count(inst) == 27);
    const auto rs = enumerate_realizations(inst);
    REQUIRE(rs.size() == 27);
    double sum = 0.0;
    for (const auto& r : rs) sum += r.prob;
    CHECK(std::abs(sum - 1.0) <= kProbSlack);

    // realization probs equal the product of the chosen location probs
    for (const auto& r : rs) {
        double prod = 1.0;
        for (std::size_t i = 0; i < inst.n(); ++i) prod *= inst.points[i].probs[r.choice[i]];
        CHECK(r.prob == doctest::Approx(prod).epsilon(1e-12));
    }
}

TEST_CASE("enumeration refuses to exceed its cap") {
    const Instance inst = generate_instance(3, 2, SpaceKind::euclidean, 1, 5);  // 8 realizations
    CHECK_THROWS_AS(enumerate_realizations(inst, 7), SizeError);
    CHECK(enumerate_realizations(inst, 8).size() == 8);
}

TEST_CASE("instance digests are stable and distinguish instances") {
    const Instance a = generate_instance(3, 2, SpaceKind::euclidean, 2, 7);
    const Instance b = generate_instance(3, 2, SpaceKind::euclidean, 2, 8);
    CHECK(instance_digest(a) == instance_digest(a));
    CHECK(instance_digest(a) != instance_digest(b));
    CHECK(instance_digest(a).size() == 16);
}
