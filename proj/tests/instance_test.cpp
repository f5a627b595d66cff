#include <doctest.h>

#include <random>

#include "sop/instance.hpp"
#include "test_util.hpp"

using namespace sop;

TEST_CASE("parse bare format with precedence chain") {
    Instance inst = Instance::parse("3  0 1 5  -1 0 1  -1 -1 0");
    CHECK(inst.size() == 3);
    CHECK(inst.start() == 0);
    CHECK(inst.end() == 2);
    CHECK(inst.preds(1).test(0));
    CHECK(inst.pred_count(1) == 1);
    CHECK(inst.preds(2).test(0));
    CHECK(inst.preds(2).test(1));
    CHECK(inst.weight(0, 1) == 1);
    CHECK(inst.weight(1, 2) == 1);
    CHECK(!inst.arc_allowed(1, 0));
    CHECK(inst.end_forced_last());
}

TEST_CASE("parse TSPLIB-style header format") {
    const char* text =
        "NAME: tiny\n"
        "TYPE: SOP\n"
        "DIMENSION: 3\n"
        "EDGE_WEIGHT_TYPE: EXPLICIT\n"
        "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        "EDGE_WEIGHT_SECTION\n"
        "3\n"
        "0 1 5\n"
        "-1 0 1\n"
        "-1 -1 0\n"
        "EOF\n";
    Instance inst = Instance::parse(text, "tiny");
    CHECK(inst.size() == 3);
    CHECK(inst.preds(2).test(1));
    CHECK(inst.weight(0, 2) == 5);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Instance::parse("2 0 1 x 0"), SopError);           // bad token
    CHECK_THROWS_AS(Instance::parse("3 0 1 2 3 0 5"), SopError);       // short matrix
    CHECK_THROWS_AS(Instance::parse("1 0"), SopError);                 // n < 2
    CHECK_THROWS_AS(Instance::parse("2 0 -2 3 0"), SopError);          // other negative
    // cyclic precedence: 1 before 2 and 2 before 1
    CHECK_THROWS_AS(Instance::parse("3  0 1 1  1 0 -1  1 -1 0"), SopError);
    // precedence entry in the start row
    CHECK_THROWS_AS(Instance::parse("3  0 -1 1  1 0 1  1 1 0"), SopError);
    // nonzero diagonal
    CHECK_THROWS_AS(Instance::parse("2  7 1  1 0"), SopError);
}

TEST_CASE("evaluate and check_feasible on the illustration instance") {
    Instance inst = test::fig1();
    // a,d,c,b,e
    CHECK(inst.evaluate(std::vector<int>{0, 3, 2, 1, 4}) == 10);
    // a,b,d,c,e (optimal)
    CHECK(inst.evaluate(std::vector<int>{0, 1, 3, 2, 4}) == 6);
    // a,b,c,d,e violates d-before-c
    CHECK_THROWS_AS(inst.evaluate(std::vector<int>{0, 1, 2, 3, 4}), SopError);
    CHECK(inst.check_feasible(std::vector<int>{0, 3, 2, 1, 4}));
    CHECK(!inst.check_feasible(std::vector<int>{0, 2, 1, 3, 4}));
    CHECK(!inst.check_feasible(std::vector<int>{0, 1, 3, 2}));      // not a permutation
    CHECK(!inst.check_feasible(std::vector<int>{3, 1, 0, 2, 4}));   // wrong endpoints
}

TEST_CASE("two-vertex instance") {
    Instance inst = Instance::parse("2  0 7  -1 0");
    CHECK(inst.check_feasible(std::vector<int>{0, 1}));
    CHECK(inst.evaluate(std::vector<int>{0, 1}) == 7);
}

TEST_CASE("check_feasible agrees with the definition-based checker") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = Instance::random(6, 50, 0.4, seed);
        std::vector<int> order{0, 1, 2, 3, 4, 5};
        std::mt19937_64 rng(seed);
        do {
            CHECK(inst.check_feasible(order) == test::naive_feasible(inst, order));
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("bare-format round trip is lossless") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = Instance::random(9, 1000, 0.3, seed);
        Instance reparsed = Instance::parse(inst.to_bare_string());
        CHECK(inst == reparsed);
        CHECK(Instance::parse(reparsed.to_bare_string()) == reparsed);
    }
    Instance fig = test::fig1();
    CHECK(Instance::parse(fig.to_bare_string()) == fig);
}

TEST_CASE("generator is deterministic and honors density 0") {
    Instance a = Instance::random(8, 100, 0.6, 7);
    Instance b = Instance::random(8, 100, 0.6, 7);
    CHECK(a == b);

    Instance sparse = Instance::random(5, 100, 0.0, 42);
    // endpoint conventions only: start precedes all, end follows all
    for (int v = 1; v < 5; ++v) CHECK(sparse.preds(v).test(0));
    CHECK(sparse.pred_count(4) == 4);
    for (int v = 1; v < 4; ++v) CHECK(sparse.pred_count(v) == 1);
    CHECK(sparse.end_forced_last());
}

TEST_CASE("generated instances stay acyclic and non-negative under evaluation") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = Instance::random(7, 200, 0.5, seed);  // throws on a cycle
        for (const auto& order : test::all_feasible(inst))
            CHECK(inst.evaluate(order) >= 0);
    }
}
