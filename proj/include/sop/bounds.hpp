#pragma once

#include <vector>

#include "sop/instance.hpp"
#include "sop/vertex_set.hpp"

namespace sop {

enum class BoundKind { Prefix, InOut, Mst };

const char* to_string(BoundKind k);

// Running sums carried along a branch for the ingoing/outgoing bound. Plain
// value type so search nodes can hold their own copy.
struct BoundState {
    Cost sum_in = 0;
    Cost sum_out = 0;
};

// Admissible suffix estimate h(n) under one of three interchangeable
// evaluators. Prefix: h = 0. InOut: max of summed minimum ingoing arcs over
// the unvisited vertices and summed minimum outgoing arcs over unvisited plus
// the last prefix vertex minus the end vertex; both sums are maintained in
// O(1) per branch step through BoundState. Mst: minimum spanning tree over
// the unvisited vertices under symmetrized precedence-censored costs,
// recomputed from scratch at every node.
class BoundEvaluator {
public:
    BoundEvaluator(const Instance& inst, BoundKind kind);

    BoundKind kind() const { return kind_; }

    BoundState root_state() const;
    BoundState child_state(const BoundState& parent, int parent_last, int v) const;

    // h for a node with the given visited set and last vertex. The state must
    // correspond to the node's branch (root_state threaded through
    // child_state along the prefix).
    Cost h(const VertexSet& visited, int last, const BoundState& state) const;

    Cost min_in(int v) const { return min_in_[v]; }
    Cost min_out(int v) const { return min_out_[v]; }

private:
    Cost mst_over_suffix(const VertexSet& visited) const;

    const Instance* inst_;
    BoundKind kind_;
    std::vector<Cost> min_in_;
    std::vector<Cost> min_out_;
};

}  // namespace sop
