#pragma once

#include <cstdint>
#include <vector>

namespace sop {

// Fixed-capacity bitset over vertex indices. Capacity is set once (at
// instance load) and never changes, so word counts always match when two
// sets from the same instance are compared or hashed.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    int capacity() const { return capacity_; }

    bool test(int v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) { words_[static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63); }
    void reset(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(1ull << (v & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& other) const { return words_ == other.words_; }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sop
