#include "sop/bounds.hpp"

#include <algorithm>

namespace sop {

const char* to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Prefix: return "P";
        case BoundKind::InOut: return "IO";
        case BoundKind::Mst: return "MST";
    }
    return "?";
}

BoundEvaluator::BoundEvaluator(const Instance& inst, BoundKind kind)
    : inst_(&inst), kind_(kind) {
    if (kind_ != BoundKind::InOut) return;
    const int n = inst.size();
    min_in_.assign(n, kInfCost);
    min_out_.assign(n, kInfCost);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || !inst.arc_allowed(u, v)) continue;
            Cost w = inst.weight(u, v);
            min_in_[v] = std::min(min_in_[v], w);
            min_out_[u] = std::min(min_out_[u], w);
        }
    }
}

BoundState BoundEvaluator::root_state() const {
    BoundState st;
    if (kind_ != BoundKind::InOut) return st;
    const int n = inst_->size();
    for (int v = 0; v < n; ++v) {
        if (v != inst_->start()) st.sum_in += min_in_[v];
        if (v != inst_->end()) st.sum_out += min_out_[v];
    }
    return st;
}

BoundState BoundEvaluator::child_state(const BoundState& parent, int parent_last,
                                       int v) const {
    if (kind_ != BoundKind::InOut) return parent;
    return {parent.sum_in - min_in_[v], parent.sum_out - min_out_[parent_last]};
}

Cost BoundEvaluator::h(const VertexSet& visited, int last, const BoundState& state) const {
    switch (kind_) {
        case BoundKind::Prefix:
            return 0;
        case BoundKind::InOut: {
            (void)last;
            (void)visited;
            return std::max(state.sum_in, state.sum_out);
        }
        case BoundKind::Mst:
            return mst_over_suffix(visited);
    }
    return 0;
}

// Prim over the unvisited vertices, dense O(k^2) scan. Symmetrized cost
// w'(a,b) = min(w(a,b), w(b,a)) with forbidden arcs treated as infinite.
Cost BoundEvaluator::mst_over_suffix(const VertexSet& visited) const {
    const int n = inst_->size();
    std::vector<int> suffix;
    suffix.reserve(n);
    for (int v = 0; v < n; ++v)
        if (!visited.test(v)) suffix.push_back(v);
    const int k = static_cast<int>(suffix.size());
    if (k <= 1) return 0;

    auto sym = [this](int a, int b) {
        Cost ab = inst_->arc_allowed(a, b) ? inst_->weight(a, b) : kInfCost;
        Cost ba = inst_->arc_allowed(b, a) ? inst_->weight(b, a) : kInfCost;
        return std::min(ab, ba);
    };

    std::vector<Cost> dist(k, kInfCost);
    std::vector<char> in_tree(k, 0);
    dist[0] = 0;
    Cost total = 0;
    for (int step = 0; step < k; ++step) {
        int best = -1;
        for (int i = 0; i < k; ++i)
            if (!in_tree[i] && (best == -1 || dist[i] < dist[best])) best = i;
        if (dist[best] >= kInfCost) return kInfCost;  // disconnected suffix
        in_tree[best] = 1;
        total += dist[best];
        for (int i = 0; i < k; ++i)
            if (!in_tree[i]) dist[i] = std::min(dist[i], sym(suffix[best], suffix[i]));
    }
    return total;
}

}  // namespace sop
