#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>

#include "sop/instance.hpp"
#include "sop/vertex_set.hpp"

namespace sop {

enum class ProbeResult { Keep, Cut };

// Prefix-equivalence domination database. Two prefixes covering the same
// vertex set and ending at the same vertex are interchangeable; the table
// keeps the cheapest prefix cost seen per (set, last) key and cuts probes
// that are strictly dominated. Equal cost keeps the prober, so restarting
// searches can still prove optimality.
class EquivalenceDatabase {
public:
    explicit EquivalenceDatabase(
        std::size_t capacity_limit = std::numeric_limits<std::size_t>::max())
        : capacity_limit_(capacity_limit) {}

    ProbeResult probe(const VertexSet& visited, int last, Cost g) {
        Key key{visited, last};
        auto it = table_.find(key);
        if (it == table_.end()) {
            if (table_.size() >= capacity_limit_) {
                saturated_ = true;
                return ProbeResult::Keep;
            }
            table_.emplace(std::move(key), g);
            return ProbeResult::Keep;
        }
        if (it->second < g) return ProbeResult::Cut;
        it->second = g;
        return ProbeResult::Keep;
    }

    void reset() {
        table_.clear();
        saturated_ = false;
    }

    bool saturated() const { return saturated_; }
    std::size_t size() const { return table_.size(); }

    // Best stored cost for a key, if any. Test and reporting use only.
    std::optional<Cost> lookup(const VertexSet& visited, int last) const {
        auto it = table_.find(Key{visited, last});
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

private:
    struct Key {
        VertexSet visited;
        int last;
        bool operator==(const Key& other) const {
            return last == other.last && visited == other.visited;
        }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = k.visited.hash() ^ (static_cast<std::uint64_t>(k.last) *
                                                  0xc2b2ae3d27d4eb4full);
            h ^= h >> 29;
            h *= 0xbf58476d1ce4e5b9ull;
            h ^= h >> 32;
            return static_cast<std::size_t>(h);
        }
    };

    std::unordered_map<Key, Cost, KeyHash> table_;
    std::size_t capacity_limit_;
    bool saturated_ = false;
};

}  // namespace sop
