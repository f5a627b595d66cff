#pragma once

#include <cstdint>
#include <vector>

#include "sop/bounds.hpp"
#include "sop/instance.hpp"

namespace sop {

// Materialized search-tree node as used by the level-synchronous and
// stack-based strategies. DFS keeps a single mutable PathState instead.
struct Node {
    VertexSet visited;
    std::vector<std::uint16_t> prefix;  // ordered visited vertices, last included
    int last = 0;
    int depth = 0;
    Cost g = 0;
    Cost f = 0;
    BoundState bstate;
    int budget = 0;  // remaining discrepancies, LDS only
};

// Candidate extension of a node: vertex to append plus the precomputed
// g/f/bound-state of the resulting child.
struct Child {
    int vertex;
    Cost g;
    Cost f;
    BoundState bstate;
};

Node make_root(const Instance& inst, const BoundEvaluator& bound);

// Feasible extensions of (visited, last, g): unvisited vertices whose
// predecessors are all visited, reached through an allowed arc. Sorted
// ascending by (f, vertex).
std::vector<Child> generate_children(const Instance& inst, const VertexSet& visited,
                                     int last, Cost g, const BoundState& state,
                                     const BoundEvaluator& bound);

inline std::vector<Child> generate_children(const Instance& inst, const Node& parent,
                                            const BoundEvaluator& bound) {
    return generate_children(inst, parent.visited, parent.last, parent.g,
                             parent.bstate, bound);
}

Node make_child(const Node& parent, const Child& c);

// Mutable root-to-node path with O(1) push/pop, for depth-first traversals.
class PathState {
public:
    PathState(const Instance& inst, const BoundEvaluator& bound);

    void push(const Child& c);
    void pop();

    const VertexSet& visited() const { return visited_; }
    const std::vector<int>& order() const { return order_; }
    int last() const { return order_.back(); }
    int depth() const { return static_cast<int>(order_.size()); }
    Cost g() const { return frames_.back().g; }
    Cost f() const { return frames_.back().f; }
    const BoundState& bstate() const { return frames_.back().state; }

private:
    struct Frame {
        Cost g;
        Cost f;
        BoundState state;
    };
    const Instance* inst_;
    VertexSet visited_;
    std::vector<int> order_;
    std::vector<Frame> frames_;
};

}  // namespace sop
