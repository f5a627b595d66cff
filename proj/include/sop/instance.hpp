#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sop/vertex_set.hpp"

namespace sop {

using Cost = long long;

// Sentinel strictly greater than any feasible tour cost (700 arcs of <= 1000
// each), chosen so that summing up to 1024 of them cannot overflow a 64-bit
// integer.
inline constexpr Cost kInfCost = 1ll << 40;

// Stored matrix value for a forbidden arc (precedence entry in SOPLIB files).
inline constexpr Cost kNoArc = -1;

class SopError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A permutation of all vertices from start to end.
using Permutation = std::vector<int>;

// Immutable SOP instance: complete arc-weight matrix, precedence predecessor
// sets, start vertex 0 and end vertex n-1. Matrix entry -1 at (i, j) encodes
// "j must be visited before i"; the arc i->j is unusable.
class Instance {
public:
    static Instance parse(std::string_view text, std::string name = "");
    static Instance load(const std::filesystem::path& path);

    // Reproducible generator mirroring SOPLIB structure: uniform costs in
    // [0, max_cost], precedences sampled with the given density over a random
    // topological order of the interior vertices, start before everything and
    // end after everything.
    static Instance random(int n, Cost max_cost, double density, std::uint64_t seed);

    int size() const { return n_; }
    int start() const { return 0; }
    int end() const { return n_ - 1; }
    const std::string& name() const { return name_; }

    // Raw matrix entry; kNoArc for forbidden arcs.
    Cost weight(int from, int to) const { return weights_[static_cast<std::size_t>(from) * n_ + to]; }
    bool arc_allowed(int from, int to) const { return weight(from, to) >= 0; }

    const VertexSet& preds(int v) const { return preds_[v]; }
    int pred_count(int v) const { return pred_counts_[v]; }

    // True when every other vertex precedes the end vertex in the data, the
    // usual SOPLIB layout. Reported, not repaired.
    bool end_forced_last() const { return end_forced_last_; }

    bool check_feasible(std::span<const int> order) const;

    // Tour cost of a feasible permutation; throws SopError otherwise.
    Cost evaluate(std::span<const int> order) const;

    // Bare SOPLIB format: n followed by the row-major matrix.
    std::string to_bare_string() const;

    bool operator==(const Instance& other) const {
        return n_ == other.n_ && weights_ == other.weights_;
    }

private:
    Instance() = default;
    void finalize();  // derives preds, validates invariants

    int n_ = 0;
    std::string name_;
    std::vector<Cost> weights_;
    std::vector<VertexSet> preds_;
    std::vector<int> pred_counts_;
    bool end_forced_last_ = false;
};

}  // namespace sop
