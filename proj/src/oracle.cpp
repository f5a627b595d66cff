#include "sop/oracle.hpp"

#include <unordered_map>
#include <vector>

namespace sop {
namespace oracle {

namespace {

struct EnumState {
    const Instance* inst;
    std::vector<int> order;
    VertexSet visited;
    Cost g = 0;
    Cost best = kInfCost;
    Permutation best_order;
    std::uint64_t count = 0;
};

void enum_rec(EnumState& st) {
    const Instance& inst = *st.inst;
    const int n = inst.size();
    if (static_cast<int>(st.order.size()) == n) {
        ++st.count;
        if (st.g < st.best) {
            st.best = st.g;
            st.best_order = st.order;
        }
        return;
    }
    int last = st.order.back();
    for (int v = 0; v < n; ++v) {
        if (st.visited.test(v) || !inst.preds(v).subset_of(st.visited)) continue;
        if (!inst.arc_allowed(last, v)) continue;
        st.visited.set(v);
        st.order.push_back(v);
        st.g += inst.weight(last, v);
        enum_rec(st);
        st.g -= inst.weight(last, v);
        st.order.pop_back();
        st.visited.reset(v);
    }
}

using MaskKey = std::uint64_t;

MaskKey dp_key(std::uint32_t mask, int last) {
    return (static_cast<MaskKey>(mask) << 10) | static_cast<MaskKey>(last);
}

std::uint32_t to_mask(const VertexSet& set, int n) {
    std::uint32_t mask = 0;
    for (int v = 0; v < n; ++v)
        if (set.test(v)) mask |= 1u << v;
    return mask;
}

}  // namespace

EnumerationResult enumerate(const Instance& inst) {
    if (inst.size() > 12) throw SopError("enumerate: instance too large (n > 12)");
    EnumState st;
    st.inst = &inst;
    st.visited = VertexSet(inst.size());
    st.visited.set(inst.start());
    st.order.push_back(inst.start());
    enum_rec(st);
    if (st.count == 0) throw SopError("enumerate: no feasible permutation");
    return {st.best, std::move(st.best_order), st.count};
}

Cost solve_dp(const Instance& inst) {
    const int n = inst.size();
    if (n > 24) throw SopError("solve_dp: instance too large (n > 24)");

    std::vector<std::uint32_t> pred_masks(n);
    for (int v = 0; v < n; ++v) pred_masks[v] = to_mask(inst.preds(v), n);

    // f*(S, i): optimal cost of a feasible prefix covering S and ending at i.
    // States are extended in increasing mask order; infeasible states are
    // never materialized.
    std::unordered_map<MaskKey, Cost> table;
    const std::uint32_t start_mask = 1u << inst.start();
    table[dp_key(start_mask, inst.start())] = 0;

    std::vector<std::uint32_t> frontier{start_mask};
    // Group states by mask so each mask is expanded once, smallest first.
    std::unordered_map<std::uint32_t, std::vector<int>> lasts_by_mask;
    lasts_by_mask[start_mask] = {inst.start()};

    std::size_t head = 0;
    while (head < frontier.size()) {
        std::uint32_t mask = frontier[head++];
        auto lasts = lasts_by_mask[mask];
        for (int last : lasts) {
            Cost base = table[dp_key(mask, last)];
            for (int v = 0; v < n; ++v) {
                if (mask & (1u << v)) continue;
                if ((pred_masks[v] & mask) != pred_masks[v]) continue;
                if (!inst.arc_allowed(last, v)) continue;
                std::uint32_t next = mask | (1u << v);
                Cost cand = base + inst.weight(last, v);
                auto [it, inserted] = table.emplace(dp_key(next, v), cand);
                if (inserted) {
                    auto& bucket = lasts_by_mask[next];
                    if (bucket.empty()) frontier.push_back(next);
                    bucket.push_back(v);
                } else if (cand < it->second) {
                    it->second = cand;
                }
            }
        }
    }

    const std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1;
    auto it = table.find(dp_key(full, inst.end()));
    if (it == table.end()) throw SopError("solve_dp: no feasible permutation");
    return it->second;
}

namespace {

std::optional<Cost> completion_rec(const Instance& inst, std::uint32_t mask, int last,
                                   const std::vector<std::uint32_t>& pred_masks,
                                   std::unordered_map<MaskKey, Cost>& memo) {
    const int n = inst.size();
    const std::uint32_t full = (1u << n) - 1;
    if (mask == full) return last == inst.end() ? std::optional<Cost>(0) : std::nullopt;
    auto key = dp_key(mask, last);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second >= kInfCost ? std::nullopt : std::optional<Cost>(it->second);

    Cost best = kInfCost;
    for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) continue;
        if ((pred_masks[v] & mask) != pred_masks[v]) continue;
        if (!inst.arc_allowed(last, v)) continue;
        auto sub = completion_rec(inst, mask | (1u << v), v, pred_masks, memo);
        if (sub) best = std::min(best, inst.weight(last, v) + *sub);
    }
    memo[key] = best;
    return best >= kInfCost ? std::nullopt : std::optional<Cost>(best);
}

}  // namespace

std::optional<Cost> optimal_completion(const Instance& inst, const VertexSet& visited,
                                       int last) {
    const int n = inst.size();
    if (n > 24) throw SopError("optimal_completion: instance too large (n > 24)");
    std::vector<std::uint32_t> pred_masks(n);
    for (int v = 0; v < n; ++v) pred_masks[v] = to_mask(inst.preds(v), n);
    std::unordered_map<MaskKey, Cost> memo;
    return completion_rec(inst, to_mask(visited, n), last, pred_masks, memo);
}

}  // namespace oracle
}  // namespace sop
