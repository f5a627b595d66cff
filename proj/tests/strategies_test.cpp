#include <doctest.h>

#include "sop/oracle.hpp"
#include "sop/strategies.hpp"
#include "test_util.hpp"

using namespace sop;

namespace {

SearchConfig config(Strategy s, BoundKind b, bool pe) {
    SearchConfig cfg;
    cfg.strategy = s;
    cfg.bound_kind = b;
    cfg.use_equivalence = pe;
    cfg.time_limit = 0;  // unlimited; all tests here run to proof or to limits
    return cfg;
}

}  // namespace

TEST_CASE("all strategies close the illustration instance") {
    Instance inst = test::fig1();
    for (Strategy s : {Strategy::Dfs, Strategy::Lds, Strategy::BeamSearch}) {
        auto report = solve(inst, config(s, BoundKind::Prefix, true));
        REQUIRE(report.best_value.has_value());
        CHECK(*report.best_value == 6);
        CHECK(report.optimal_proven);
        CHECK(*report.best_permutation == Permutation{0, 1, 3, 2, 4});
        CHECK(inst.evaluate(*report.best_permutation) == 6);
    }
}

TEST_CASE("every proven run matches the enumeration oracle") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Instance inst = Instance::random(8, 100, 0.3, seed);
        Cost reference = oracle::enumerate(inst).optimal_value;
        for (Strategy s : {Strategy::Dfs, Strategy::Lds, Strategy::BeamSearch})
            for (BoundKind b : {BoundKind::Prefix, BoundKind::InOut, BoundKind::Mst})
                for (bool pe : {false, true}) {
                    auto report = solve(inst, config(s, b, pe));
                    CHECK(report.optimal_proven);
                    CHECK(report.best_value == reference);
                }
    }
}

TEST_CASE("degenerate parameters reduce to greedy descent") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = Instance::random(9, 1000, 0.15, seed);
        auto greedy = test::greedy_descent(inst, BoundKind::Prefix);
        REQUIRE(greedy.has_value());

        auto beam_cfg = config(Strategy::BeamSearch, BoundKind::Prefix, true);
        beam_cfg.max_iterations = 1;  // a single D=1 pass
        auto beam = solve(inst, beam_cfg);

        auto lds_cfg = config(Strategy::Lds, BoundKind::Prefix, true);
        lds_cfg.max_iterations = 1;  // a single d=1 pass
        auto lds = solve(inst, lds_cfg);

        CHECK(beam.best_permutation == greedy);
        CHECK(lds.best_permutation == greedy);
    }
}

TEST_CASE("anytime trace is strictly decreasing and best matches the trace") {
    Instance inst = Instance::random(12, 1000, 0.15, 3);
    auto report = solve(inst, config(Strategy::BeamSearch, BoundKind::Prefix, true));
    REQUIRE(!report.trace.empty());
    for (std::size_t i = 1; i < report.trace.size(); ++i)
        CHECK(report.trace[i].value < report.trace[i - 1].value);
    CHECK(report.trace.back().value == report.best_value);
    CHECK(report.time_to_best == report.trace.back().elapsed_s);
}

TEST_CASE("first incumbent arrives in the first iteration for lds and beam") {
    Instance inst = Instance::random(12, 1000, 0.3, 5);
    for (Strategy s : {Strategy::Lds, Strategy::BeamSearch}) {
        auto cfg = config(s, BoundKind::Prefix, true);
        cfg.max_iterations = 1;
        auto report = solve(inst, cfg);
        CHECK(report.best_value.has_value());
    }
}

TEST_CASE("upgrading the bound changes node counts, not the proven value") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Instance inst = Instance::random(9, 100, 0.3, seed);
        auto prefix = solve(inst, config(Strategy::Dfs, BoundKind::Prefix, false));
        auto inout = solve(inst, config(Strategy::Dfs, BoundKind::InOut, false));
        CHECK(prefix.best_value == inout.best_value);
        CHECK(prefix.optimal_proven);
        CHECK(inout.optimal_proven);
    }
}

TEST_CASE("identical config yields identical counters and trace values") {
    Instance inst = Instance::random(10, 1000, 0.15, 11);
    for (Strategy s : {Strategy::Dfs, Strategy::Lds, Strategy::BeamSearch}) {
        auto cfg = config(s, BoundKind::InOut, true);
        auto a = solve(inst, cfg);
        auto b = solve(inst, cfg);
        CHECK(a.nodes_opened == b.nodes_opened);
        CHECK(a.nodes_cut_bound == b.nodes_cut_bound);
        CHECK(a.nodes_cut_equivalence == b.nodes_cut_equivalence);
        CHECK(a.nodes_cut_heuristic == b.nodes_cut_heuristic);
        CHECK(a.best_value == b.best_value);
        REQUIRE(a.trace.size() == b.trace.size());
        for (std::size_t i = 0; i < a.trace.size(); ++i)
            CHECK(a.trace[i].value == b.trace[i].value);
        REQUIRE(a.iterations.size() == b.iterations.size());
        for (std::size_t i = 0; i < a.iterations.size(); ++i) {
            CHECK(a.iterations[i].parameter == b.iterations[i].parameter);
            CHECK(a.iterations[i].nodes == b.iterations[i].nodes);
        }
    }
}

TEST_CASE("node limit stops the search without a proof claim") {
    Instance inst = Instance::random(30, 1000, 0.15, 2);
    auto cfg = config(Strategy::Dfs, BoundKind::Prefix, false);
    cfg.node_limit = 500;
    auto report = solve(inst, cfg);
    CHECK(report.limit_hit);
    CHECK(!report.optimal_proven);
    CHECK(report.nodes_opened <= 500);
}

TEST_CASE("a saturated database downgrades the proof claim") {
    Instance inst = Instance::random(8, 100, 0.15, 4);
    auto cfg = config(Strategy::Dfs, BoundKind::Prefix, true);
    cfg.pe_capacity = 4;
    auto report = solve(inst, cfg);
    CHECK(report.db_saturated);
    CHECK(!report.optimal_proven);
    // the search itself stays sound
    CHECK(report.best_value == oracle::enumerate(inst).optimal_value);
}

TEST_CASE("iteration log records exactness and growth") {
    Instance inst = Instance::random(9, 1000, 0.15, 8);
    auto report = solve(inst, config(Strategy::BeamSearch, BoundKind::Prefix, true));
    REQUIRE(!report.iterations.empty());
    CHECK(report.iterations.back().exact);
    for (std::size_t i = 0; i + 1 < report.iterations.size(); ++i) {
        CHECK(!report.iterations[i].exact);
        CHECK(report.iterations[i + 1].parameter ==
              report.iterations[i].parameter * 2);
    }
}

TEST_CASE("descriptor round trip") {
    for (const char* d : {"BS,PE,P", "BS,P", "DFS,PE,IO", "LDS,PE,MST", "LDS,MST"}) {
        auto cfg = parse_descriptor(d);
        REQUIRE(cfg.has_value());
        CHECK(cfg->descriptor() == d);
    }
    CHECK(!parse_descriptor("XX,PE,P").has_value());
    CHECK(!parse_descriptor("BS,PE").has_value());
    CHECK(!parse_descriptor("BS,PE,P,extra").has_value());
}
