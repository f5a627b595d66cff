#include "sop/strategies.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <string>

#include "sop/search_core.hpp"

namespace sop {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Dfs: return "DFS";
        case Strategy::Lds: return "LDS";
        case Strategy::BeamSearch: return "BS";
    }
    return "?";
}

std::string SearchConfig::descriptor() const {
    std::string out = to_string(strategy);
    if (use_equivalence) out += ",PE";
    out += ",";
    out += to_string(bound_kind);
    return out;
}

std::optional<SearchConfig> parse_descriptor(std::string_view desc) {
    SearchConfig cfg;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= desc.size()) {
        auto comma = desc.find(',', pos);
        if (comma == std::string_view::npos) comma = desc.size();
        parts.emplace_back(desc.substr(pos, comma - pos));
        pos = comma + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
    if (parts[0] == "DFS") cfg.strategy = Strategy::Dfs;
    else if (parts[0] == "LDS") cfg.strategy = Strategy::Lds;
    else if (parts[0] == "BS") cfg.strategy = Strategy::BeamSearch;
    else return std::nullopt;
    std::size_t i = 1;
    cfg.use_equivalence = parts.size() == 3;
    if (cfg.use_equivalence) {
        if (parts[1] != "PE") return std::nullopt;
        i = 2;
    }
    if (parts[i] == "P") cfg.bound_kind = BoundKind::Prefix;
    else if (parts[i] == "IO") cfg.bound_kind = BoundKind::InOut;
    else if (parts[i] == "MST") cfg.bound_kind = BoundKind::Mst;
    else return std::nullopt;
    return cfg;
}

namespace {

constexpr Cost kNoIncumbent = std::numeric_limits<Cost>::max() / 2;

class SearchRun {
public:
    SearchRun(const Instance& inst, const SearchConfig& config,
              IncumbentCallback on_incumbent, void* ctx)
        : inst_(inst),
          config_(config),
          bound_(inst, config.bound_kind),
          db_(config.pe_capacity),
          on_incumbent_(on_incumbent),
          ctx_(ctx),
          start_(Clock::now()) {}

    SearchReport run() {
        switch (config_.strategy) {
            case Strategy::Dfs: run_dfs(); break;
            case Strategy::Lds: run_lds(); break;
            case Strategy::BeamSearch: run_beam(); break;
        }
        report_.db_saturated = db_.saturated();
        report_.total_time = elapsed();
        return std::move(report_);
    }

private:
    using Clock = std::chrono::steady_clock;

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    bool stop() {
        if (stopped_) return true;
        if (config_.node_limit && report_.nodes_opened >= *config_.node_limit) {
            stopped_ = report_.limit_hit = true;
            return true;
        }
        if (config_.time_limit > 0 && (++tick_ & 255) == 0 &&
            elapsed() >= config_.time_limit) {
            stopped_ = report_.limit_hit = true;
            return true;
        }
        return false;
    }

    template <typename OrderRange>
    void offer_solution(const OrderRange& order, Cost value) {
        if (value >= incumbent_) return;
        incumbent_ = value;
        report_.best_value = value;
        report_.best_permutation = Permutation(order.begin(), order.end());
        double t = elapsed();
        report_.time_to_best = t;
        report_.trace.push_back({t, value});
        if (on_incumbent_) on_incumbent_(ctx_, t, value);
    }

    bool probe_cut(const VertexSet& visited, int last, Cost g) {
        if (!config_.use_equivalence) return false;
        if (db_.probe(visited, last, g) == ProbeResult::Cut) {
            ++report_.nodes_cut_equivalence;
            return true;
        }
        return false;
    }

    void mark_proven() {
        if (db_.saturated()) return;  // heuristic refusals void the proof
        report_.optimal_proven = true;
        report_.time_to_proof = elapsed();
    }

    // ---- DFS ----------------------------------------------------------

    void run_dfs() {
        PathState state(inst_, bound_);
        dfs(state);
        if (!stopped_) mark_proven();
    }

    void dfs(PathState& state) {
        if (stop()) return;
        ++report_.nodes_opened;
        if (state.depth() == inst_.size()) {
            offer_solution(state.order(), state.g());
            return;
        }
        auto kids = generate_children(inst_, state.visited(), state.last(), state.g(),
                                      state.bstate(), bound_);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            if (stopped_) return;
            if (kids[i].f >= incumbent_) {
                report_.nodes_cut_bound += kids.size() - i;  // sorted by f
                break;
            }
            state.push(kids[i]);
            if (probe_cut(state.visited(), state.last(), state.g())) {
                state.pop();
                continue;
            }
            dfs(state);
            state.pop();
        }
    }

    // ---- Iterative LDS ------------------------------------------------

    void run_lds() {
        long long d = config_.lds_init;
        std::uint64_t iterations = 0;
        while (!stopped_) {
            std::uint64_t nodes_before = report_.nodes_opened;
            bool exact = lds_iteration(d - 1);
            report_.iterations.push_back(
                {d, report_.nodes_opened - nodes_before, exact && !stopped_});
            if (exact && !stopped_) {
                mark_proven();
                break;
            }
            if (config_.max_iterations && ++iterations >= *config_.max_iterations) break;
            ++d;
        }
    }

    // One LDS pass where `budget` discrepancies are allowed on the whole
    // root-to-leaf path (iteration label d allows d-1, so the first pass is a
    // pure greedy descent). Returns whether the pass was exact, i.e. no
    // sibling with a chance of improving the incumbent was skipped.
    bool lds_iteration(long long budget) {
        bool exact = true;
        std::vector<Node> stack;
        Node root = make_root(inst_, bound_);
        // No path can spend more than (n-1)(n-2)/2 discrepancies (rank at
        // depth k is at most n-1-k), so larger budgets behave identically.
        long long cap =
            static_cast<long long>(inst_.size() - 1) * (inst_.size() - 2) / 2;
        root.budget = static_cast<int>(std::min(budget, cap));
        stack.push_back(std::move(root));

        while (!stack.empty()) {
            if (stop()) return false;
            Node node = std::move(stack.back());
            stack.pop_back();
            if (node.f >= incumbent_) {
                ++report_.nodes_cut_bound;
                continue;
            }
            ++report_.nodes_opened;
            if (node.depth == inst_.size()) {
                offer_solution(node.prefix, node.g);
                continue;
            }
            auto kids = generate_children(inst_, node, bound_);
            // Children at rank i cost i discrepancies; ranks past the budget
            // are skipped and counted as heuristic cuts unless the bound
            // would have cut them anyway.
            std::size_t generated = std::min<std::size_t>(
                kids.size(), static_cast<std::size_t>(node.budget) + 1);
            std::vector<Node> survivors;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (kids[i].f >= incumbent_) {
                    report_.nodes_cut_bound += kids.size() - i;
                    break;
                }
                if (i >= generated) {
                    ++report_.nodes_cut_heuristic;
                    exact = false;
                    continue;
                }
                Node child = make_child(node, kids[i]);
                if (probe_cut(child.visited, child.last, child.g)) continue;
                child.budget = node.budget - static_cast<int>(i);
                survivors.push_back(std::move(child));
            }
            // Reverse push so the best-ranked child is popped first.
            for (auto it = survivors.rbegin(); it != survivors.rend(); ++it)
                stack.push_back(std::move(*it));
        }
        return exact;
    }

    // ---- Iterative Beam Search ----------------------------------------

    struct ChildRef {
        Child child;
        std::uint32_t parent;
        std::uint64_t seq;
    };

    struct ChildRefWorse {
        // best-first ordering; as a priority_queue comparator the heap top is
        // the worst kept child
        bool operator()(const ChildRef& a, const ChildRef& b) const {
            if (a.child.f != b.child.f) return a.child.f < b.child.f;
            if (a.child.vertex != b.child.vertex) return a.child.vertex < b.child.vertex;
            return a.seq < b.seq;
        }
    };

    void run_beam() {
        long long width = config_.beam_init;
        std::uint64_t iterations = 0;
        while (!stopped_) {
            std::uint64_t nodes_before = report_.nodes_opened;
            bool exact = beam_iteration(width);
            report_.iterations.push_back(
                {width, report_.nodes_opened - nodes_before, exact && !stopped_});
            if (exact && !stopped_) {
                mark_proven();
                break;
            }
            if (config_.max_iterations && ++iterations >= *config_.max_iterations) break;
            if (width <= (1ll << 40)) width *= config_.beam_growth;
        }
    }

    bool beam_iteration(long long width) {
        bool exact = true;
        std::vector<Node> candidates{make_root(inst_, bound_)};
        std::uint64_t seq = 0;

        while (!candidates.empty()) {
            // Best `width` children across the whole level, worst on top.
            std::priority_queue<ChildRef, std::vector<ChildRef>, ChildRefWorse> kept;

            for (std::uint32_t idx = 0; idx < candidates.size(); ++idx) {
                if (stop()) return false;
                const Node& node = candidates[idx];
                if (node.f >= incumbent_) {
                    ++report_.nodes_cut_bound;
                    continue;
                }
                ++report_.nodes_opened;
                auto kids = generate_children(inst_, node, bound_);
                VertexSet child_visited = node.visited;
                for (std::size_t i = 0; i < kids.size(); ++i) {
                    const Child& kid = kids[i];
                    if (kid.f >= incumbent_) {
                        report_.nodes_cut_bound += kids.size() - i;
                        break;
                    }
                    child_visited.set(kid.vertex);
                    bool cut = probe_cut(child_visited, kid.vertex, kid.g);
                    child_visited.reset(kid.vertex);
                    if (cut) continue;
                    if (node.depth + 1 == inst_.size()) {
                        auto tour = node.prefix;
                        tour.push_back(static_cast<std::uint16_t>(kid.vertex));
                        offer_solution(tour, kid.g);
                        continue;
                    }
                    ChildRef ref{kid, idx, seq++};
                    if (static_cast<long long>(kept.size()) < width) {
                        kept.push(std::move(ref));
                    } else if (ChildRefWorse{}(ref, kept.top())) {
                        kept.pop();
                        kept.push(std::move(ref));
                        ++report_.nodes_cut_heuristic;
                        exact = false;
                    } else {
                        ++report_.nodes_cut_heuristic;
                        exact = false;
                    }
                }
            }

            std::vector<ChildRef> selected;
            selected.reserve(kept.size());
            while (!kept.empty()) {
                selected.push_back(kept.top());
                kept.pop();
            }
            std::sort(selected.begin(), selected.end(), ChildRefWorse{});
            std::vector<Node> next;
            next.reserve(selected.size());
            for (const ChildRef& ref : selected)
                next.push_back(make_child(candidates[ref.parent], ref.child));
            candidates = std::move(next);
        }
        return exact;
    }

    const Instance& inst_;
    SearchConfig config_;
    BoundEvaluator bound_;
    EquivalenceDatabase db_;
    IncumbentCallback on_incumbent_;
    void* ctx_;
    Clock::time_point start_;
    SearchReport report_;
    Cost incumbent_ = kNoIncumbent;
    bool stopped_ = false;
    std::uint64_t tick_ = 0;
};

}  // namespace

SearchReport solve(const Instance& inst, const SearchConfig& config,
                   IncumbentCallback on_incumbent, void* ctx) {
    SearchRun run(inst, config, on_incumbent, ctx);
    return run.run();
}

}  // namespace sop
