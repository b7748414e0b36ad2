#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "orelab/exact_int.hpp"

namespace orelab {

/// Set of vertices drawn from 1..128, stored as a 128-bit mask.
/// Vertex v occupies bit v-1; the mask value doubles as the canonical order.
class VertexSet {
public:
    static constexpr int max_vertices = 128;

    constexpr VertexSet() = default;

    static constexpr VertexSet from_mask(uint128 m) {
        VertexSet s;
        s.bits_ = m;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static VertexSet range(int lo, int hi) {
        VertexSet s;
        for (int v = lo; v <= hi; ++v) s.insert(v);
        return s;
    }

    constexpr uint128 mask() const { return bits_; }

    bool contains(int v) const { return v >= 1 && v <= max_vertices && (bits_ >> (v - 1)) & 1; }

    void insert(int v) {
        check_range(v);
        bits_ |= uint128{1} << (v - 1);
    }
    void erase(int v) {
        check_range(v);
        bits_ &= ~(uint128{1} << (v - 1));
    }
    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    int size() const {
        return std::popcount(static_cast<std::uint64_t>(bits_)) +
               std::popcount(static_cast<std::uint64_t>(bits_ >> 64));
    }
    bool empty() const { return bits_ == 0; }

    /// Smallest member, or 0 when empty.
    int min_vertex() const {
        if (bits_ == 0) return 0;
        auto lo = static_cast<std::uint64_t>(bits_);
        if (lo != 0) return std::countr_zero(lo) + 1;
        return 64 + std::countr_zero(static_cast<std::uint64_t>(bits_ >> 64)) + 1;
    }

    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
        return from_mask(a.bits_ & b.bits_);
    }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
        return from_mask(a.bits_ | b.bits_);
    }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
        return from_mask(a.bits_ & ~b.bits_);
    }

    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }
    friend constexpr bool operator>(VertexSet a, VertexSet b) { return a.bits_ > b.bits_; }

    /// Visit members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        uint128 m = bits_;
        while (m != 0) {
            uint128 low = m & (~m + 1);
            int v;
            auto lo64 = static_cast<std::uint64_t>(low);
            if (lo64 != 0)
                v = std::countr_zero(lo64) + 1;
            else
                v = 64 + std::countr_zero(static_cast<std::uint64_t>(low >> 64)) + 1;
            f(v);
            m ^= low;
        }
    }

    std::vector<int> to_vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// Space-separated ascending 1-based ids, e.g. "2 3 7".
    std::string str() const {
        std::string out;
        for_each([&](int v) {
            if (!out.empty()) out.push_back(' ');
            out += std::to_string(v);
        });
        return out;
    }

private:
    static void check_range(int v) {
        if (v < 1 || v > max_vertices)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside 1.." + std::to_string(max_vertices));
    }

    uint128 bits_ = 0;
};

}  // namespace orelab
