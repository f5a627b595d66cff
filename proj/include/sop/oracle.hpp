#pragma once

#include <optional>

#include "sop/instance.hpp"

namespace sop {
namespace oracle {

struct EnumerationResult {
    Cost optimal_value;
    Permutation optimal_permutation;
    std::uint64_t feasible_count;
};

// Exhaustive enumeration of feasible permutations (precedence-pruned, no
// bounds). Throws SopError above the factorial guard (n > 12) or when no
// feasible permutation exists.
EnumerationResult enumerate(const Instance& inst);

// Held-Karp dynamic programming restricted to precedence-feasible states.
// Guarded at n <= 24. Throws SopError on infeasible instances.
Cost solve_dp(const Instance& inst);

// Optimal cost of completing a prefix with the given visited set and last
// vertex into a full tour ending at the end vertex; nullopt when no feasible
// completion exists. Memoization-free entry point for small n; used as the
// admissibility reference.
std::optional<Cost> optimal_completion(const Instance& inst, const VertexSet& visited,
                                       int last);

}  // namespace oracle
}  // namespace sop
