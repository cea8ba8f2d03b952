#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace ramsey {

// Hard cap on vertex counts. The largest built-in construction needs 105
// vertices; 1024 leaves ample headroom while keeping adjacency sets a fixed
// 16 words.
inline constexpr int kMaxVertices = 1024;

// Fixed-capacity set of vertices 0..kMaxVertices-1. All hot detector loops
// run on these; operations are branch-free word sweeps the compiler
// vectorizes.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    constexpr bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    constexpr void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    constexpr int count() const {
        int n = 0;
        for (auto w : w_) n += std::popcount(w);
        return n;
    }

    // Lowest member, or -1 when empty.
    constexpr int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // Lowest member strictly greater than v, or -1.
    constexpr int next_after(int v) const {
        int i = (v + 1) >> 6;
        if (i >= kWords) return -1;
        std::uint64_t w = w_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i >= kWords) return -1;
            w = w_[i];
        }
    }

    constexpr VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    constexpr VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    constexpr VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    constexpr bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::array<std::uint64_t, kWords> w_{};
};

} // namespace ramsey
