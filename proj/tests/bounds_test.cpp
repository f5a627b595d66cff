#include <doctest.h>

#include <algorithm>
#include <random>

#include "sop/bounds.hpp"
#include "sop/oracle.hpp"
#include "sop/search_core.hpp"
#include "test_util.hpp"

using namespace sop;

namespace {

// Kruskal on the same symmetrized edge set, as an independent MST reference.
Cost kruskal_mst(const Instance& inst, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k <= 1) return 0;
    struct Edge {
        Cost w;
        int a, b;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int a = vertices[i], b = vertices[j];
            Cost ab = inst.arc_allowed(a, b) ? inst.weight(a, b) : kInfCost;
            Cost ba = inst.arc_allowed(b, a) ? inst.weight(b, a) : kInfCost;
            Cost w = std::min(ab, ba);
            if (w < kInfCost) edges.push_back({w, i, j});
        }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return x.w < y.w; });
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    Cost total = 0;
    int joined = 0;
    for (const Edge& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        total += e.w;
        if (++joined == k - 1) return total;
    }
    return kInfCost;  // disconnected
}

// Walks the whole tree checking each bound against the brute-force optimal
// completion. Dead-end nodes (no completion) are skipped.
void check_admissible(const Instance& inst, PathState& state,
                      const BoundEvaluator& bound) {
    auto completion = oracle::optimal_completion(inst, state.visited(), state.last());
    if (completion) {
        Cost h = bound.h(state.visited(), state.last(), state.bstate());
        CHECK(h <= *completion);
    }
    if (state.depth() == inst.size()) return;
    auto kids = generate_children(inst, state.visited(), state.last(), state.g(),
                                  state.bstate(), bound);
    for (const auto& kid : kids) {
        state.push(kid);
        check_admissible(inst, state, bound);
        state.pop();
    }
}

}  // namespace

TEST_CASE("prefix bound is identically zero") {
    Instance inst = test::fig1();
    BoundEvaluator bound(inst, BoundKind::Prefix);
    Node root = make_root(inst, bound);
    CHECK(bound.h(root.visited, root.last, root.bstate) == 0);
    CHECK(root.f == root.g);
}

TEST_CASE("ingoing/outgoing bound on the 3-vertex chain") {
    Instance inst = test::chain3();
    BoundEvaluator bound(inst, BoundKind::InOut);
    CHECK(bound.min_in(1) == 1);
    CHECK(bound.min_in(2) == 1);
    CHECK(bound.min_out(0) == 1);
    CHECK(bound.min_out(1) == 1);
    Node root = make_root(inst, bound);
    CHECK(root.bstate.sum_in == 2);
    CHECK(root.bstate.sum_out == 2);
    CHECK(bound.h(root.visited, root.last, root.bstate) == 2);  // = optimal completion
}

TEST_CASE("inout bound is zero at full depth") {
    Instance inst = test::chain3();
    BoundEvaluator bound(inst, BoundKind::InOut);
    PathState state(inst, bound);
    while (state.depth() < inst.size()) {
        auto kids = generate_children(inst, state.visited(), state.last(), state.g(),
                                      state.bstate(), bound);
        REQUIRE(!kids.empty());
        state.push(kids[0]);
    }
    CHECK(bound.h(state.visited(), state.last(), state.bstate()) == 0);
}

TEST_CASE("mst bound trivial cases") {
    Instance inst = test::chain3();
    BoundEvaluator bound(inst, BoundKind::Mst);
    VertexSet visited(3);
    visited.set(0);
    visited.set(1);
    CHECK(bound.h(visited, 1, {}) == 0);  // single-vertex suffix
    visited.set(2);
    CHECK(bound.h(visited, 2, {}) == 0);  // empty suffix
}

TEST_CASE("all three bounds are admissible on random instances") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Instance inst = Instance::random(7 + static_cast<int>(seed % 3), 100, 0.3, seed);
        for (BoundKind kind : {BoundKind::Prefix, BoundKind::InOut, BoundKind::Mst}) {
            BoundEvaluator bound(inst, kind);
            PathState state(inst, bound);
            check_admissible(inst, state, bound);
        }
    }
}

TEST_CASE("prim agrees with kruskal on random suffixes") {
    std::mt19937_64 rng(123);
    for (int round = 0; round < 40; ++round) {
        Instance inst = Instance::random(12, 500, 0.3, round);
        VertexSet visited(inst.size());
        visited.set(inst.start());
        std::vector<int> suffix;
        for (int v = 1; v < inst.size(); ++v) {
            if (rng() % 3 == 0 && v != inst.end())
                visited.set(v);
            else
                suffix.push_back(v);
        }
        BoundEvaluator bound(inst, BoundKind::Mst);
        CHECK(bound.h(visited, inst.start(), {}) == kruskal_mst(inst, suffix));
    }
}

TEST_CASE("incrementally maintained inout sums match recomputation") {
    // random walks on a SOPLIB-sized generated instance
    Instance inst = Instance::random(200, 1000, 0.15, 99);
    BoundEvaluator bound(inst, BoundKind::InOut);
    std::mt19937_64 rng(7);
    for (int walk = 0; walk < 30; ++walk) {
        PathState state(inst, bound);
        while (state.depth() < inst.size()) {
            auto kids = generate_children(inst, state.visited(), state.last(),
                                          state.g(), state.bstate(), bound);
            if (kids.empty()) break;
            state.push(kids[rng() % kids.size()]);

            // from-scratch recomputation of both sums
            Cost sum_in = 0, sum_out = 0;
            for (int v = 0; v < inst.size(); ++v) {
                if (!state.visited().test(v)) sum_in += bound.min_in(v);
                if ((!state.visited().test(v) || v == state.last()) && v != inst.end())
                    sum_out += bound.min_out(v);
            }
            REQUIRE(state.bstate().sum_in == sum_in);
            REQUIRE(state.bstate().sum_out == sum_out);
        }
    }
}
