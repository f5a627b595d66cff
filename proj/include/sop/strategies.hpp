#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sop/bounds.hpp"
#include "sop/equivalence.hpp"
#include "sop/instance.hpp"

namespace sop {

enum class Strategy { Dfs, Lds, BeamSearch };

const char* to_string(Strategy s);

struct SearchConfig {
    Strategy strategy = Strategy::BeamSearch;
    BoundKind bound_kind = BoundKind::Prefix;
    bool use_equivalence = true;
    double time_limit = 600.0;  // seconds; <= 0 means unlimited
    std::optional<std::uint64_t> node_limit;
    std::optional<std::uint64_t> max_iterations;  // LDS / Beam restarts
    long long beam_init = 1;
    long long beam_growth = 2;
    long long lds_init = 1;
    std::size_t pe_capacity = std::numeric_limits<std::size_t>::max();

    // Table 1 style descriptor, e.g. "BS,PE,P".
    std::string descriptor() const;
};

std::optional<SearchConfig> parse_descriptor(std::string_view desc);

struct IncumbentSample {
    double elapsed_s;
    Cost value;
};

struct IterationStat {
    long long parameter;  // beam width D or discrepancy label d
    std::uint64_t nodes;
    bool exact;
};

struct SearchReport {
    std::optional<Cost> best_value;
    std::optional<Permutation> best_permutation;
    bool optimal_proven = false;

    std::uint64_t nodes_opened = 0;
    std::uint64_t nodes_cut_bound = 0;
    std::uint64_t nodes_cut_equivalence = 0;
    std::uint64_t nodes_cut_heuristic = 0;

    std::vector<IncumbentSample> trace;
    std::vector<IterationStat> iterations;

    double time_to_best = 0.0;
    std::optional<double> time_to_proof;
    double total_time = 0.0;
    bool limit_hit = false;
    bool db_saturated = false;
};

// Optional hook invoked on every incumbent improvement (anytime
// observability for the CLI).
using IncumbentCallback = void (*)(void* ctx, double elapsed_s, Cost value);

SearchReport solve(const Instance& inst, const SearchConfig& config,
                   IncumbentCallback on_incumbent = nullptr, void* ctx = nullptr);

}  // namespace sop
