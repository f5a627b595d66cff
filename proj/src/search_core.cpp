#include "sop/search_core.hpp"

#include <algorithm>

namespace sop {

Node make_root(const Instance& inst, const BoundEvaluator& bound) {
    Node root;
    root.visited = VertexSet(inst.size());
    root.visited.set(inst.start());
    root.prefix = {static_cast<std::uint16_t>(inst.start())};
    root.last = inst.start();
    root.depth = 1;
    root.g = 0;
    root.bstate = bound.root_state();
    root.f = bound.h(root.visited, root.last, root.bstate);
    return root;
}

std::vector<Child> generate_children(const Instance& inst, const VertexSet& visited,
                                     int last, Cost g, const BoundState& state,
                                     const BoundEvaluator& bound) {
    std::vector<Child> children;
    const int n = inst.size();
    VertexSet child_visited = visited;
    for (int v = 0; v < n; ++v) {
        if (visited.test(v)) continue;
        if (!inst.preds(v).subset_of(visited)) continue;
        if (!inst.arc_allowed(last, v)) continue;
        Child c;
        c.vertex = v;
        c.g = g + inst.weight(last, v);
        c.bstate = bound.child_state(state, last, v);
        child_visited.set(v);
        c.f = c.g + bound.h(child_visited, v, c.bstate);
        child_visited.reset(v);
        children.push_back(c);
    }
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
        return a.f != b.f ? a.f < b.f : a.vertex < b.vertex;
    });
    return children;
}

Node make_child(const Node& parent, const Child& c) {
    Node node;
    node.visited = parent.visited;
    node.visited.set(c.vertex);
    node.prefix = parent.prefix;
    node.prefix.push_back(static_cast<std::uint16_t>(c.vertex));
    node.last = c.vertex;
    node.depth = parent.depth + 1;
    node.g = c.g;
    node.f = c.f;
    node.bstate = c.bstate;
    return node;
}

PathState::PathState(const Instance& inst, const BoundEvaluator& bound)
    : inst_(&inst), visited_(inst.size()) {
    visited_.set(inst.start());
    order_.push_back(inst.start());
    BoundState root = bound.root_state();
    frames_.push_back({0, bound.h(visited_, inst.start(), root), root});
}

void PathState::push(const Child& c) {
    visited_.set(c.vertex);
    order_.push_back(c.vertex);
    frames_.push_back({c.g, c.f, c.bstate});
}

void PathState::pop() {
    visited_.reset(order_.back());
    order_.pop_back();
    frames_.pop_back();
}

}  // namespace sop
