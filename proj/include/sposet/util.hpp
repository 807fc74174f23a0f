#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sposet {

// Set of vertex indices (0-based bits); posets are limited to 64 vertices.
using VertexSet = std::uint64_t;

inline bool vs_contains(VertexSet s, int i) { return (s >> i) & 1u; }
inline VertexSet vs_bit(int i) { return VertexSet{1} << i; }
inline int vs_count(VertexSet s) { return std::popcount(s); }
inline bool vs_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

template <class F>
void vs_for_each(VertexSet s, F&& f) {
    while (s) {
        int i = std::countr_zero(s);
        f(i);
        s &= s - 1;
    }
}

// Dynamic bitset over face indices; posets can exceed 64 elements.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace sposet
