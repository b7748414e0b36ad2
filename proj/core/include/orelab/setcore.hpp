#pragma once

#include <cstdint>
#include <string>

#include "orelab/exact_int.hpp"
#include "orelab/vertex_set.hpp"

namespace orelab {

/// C(a, b) as a checked 128-bit integer. Total by convention: 0 unless
/// 0 <= b <= a, so formulas like C(n-r-2, r-2) need no case splits at
/// small n. Throws std::overflow_error when the value exceeds 128 bits.
ExactInt binom(std::int64_t a, std::int64_t b);

/// Stream of all r-subsets of {1..n} in strictly increasing bitmask value
/// (colexicographic) order. next() yields each subset exactly once;
/// binom(n, r) items in total.
class SubsetStream {
public:
    SubsetStream(int n, int r);

    bool done() const { return remaining_ == 0; }
    std::uint64_t remaining() const { return remaining_; }

    VertexSet next();

    /// Advance `cur` to the colex successor among r-subsets (Gosper step).
    static uint128 gosper_next(uint128 cur);

private:
    uint128 cur_ = 0;
    std::uint64_t remaining_ = 0;
};

/// k-th r-subset of {1..n} in colex order, k in [0, binom(n,r)).
VertexSet subset_at(int n, int r, std::uint64_t k);

/// Colex rank of an r-subset (inverse of subset_at).
std::uint64_t subset_rank(VertexSet s);

template <typename F>
void for_each_subset(int n, int r, F&& f) {
    SubsetStream st(n, r);
    while (!st.done()) f(st.next());
}

/// Closed-form bounds. Parameters beyond (n, r) are taken from the fields
/// each formula needs; unused fields are ignored.
enum class BoundId {
    EKR_ORE,                // r * C(n-2, r-2)
    HM_ORE,                 // r * (C(n-2, r-2) - C(n-r-2, r-2))
    MATCH_ORE,              // r * (C(n-1, r-1) - C(n-s, r-1))
    ERDOS_EDGE,             // max{ C(rs-1, r), C(n, r) - C(n-(s-1), r) }
    HM_SIZE,                // C(n-1, r-1) - C(n-r-1, r-1) + 1
    COVER_SIZE,             // C(n, r) - C(n-(s-1), r)
    CLIQUE_SIZE,            // C(rs-1, r)
    REGULAR_CAP,            // floor(C(n,r) * d / (d + p)), d = r(r-1)(r-2), p = (n-r)(n-r-1)(n-r-2)
    WILSON_CAP,             // C(n-t, r-t)
    THIRD_FAMILY_CAP,       // C(n-1,r-1) - C(n-r-1,r-1) - C(n-r-2,r-2) + 2
    CROSS_NONTRIV_CAP,      // (C(n-1,r-1) + 1) * (C(n-1,r-1) - C(n-r-1,r-1))
    THREE_TRANSVERSAL_CAP,  // ell^2 * C(n-3, r-3)
    FRANKL_MAXDEG_CAP,      // C(n-1,r-1) - C(n-i-1,r-1) + C(n-i-1,r-i)
};

struct BoundParams {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t ell = 0;
    std::int64_t i = 0;
};

struct BoundFormula {
    BoundId id;
    BoundParams params;
};

ExactInt eval_bound(const BoundFormula& f);
ExactInt eval_bound(BoundId id, BoundParams p);

const char* bound_name(BoundId id);

/// Whether c*C(a-1,b-1) > C(a,b) - C(a-c,b) > c*C(a-c,b-1), exactly.
/// The middle term counts b-subsets of an a-set that meet a fixed c-set;
/// both comparisons are strict only when some b-set can meet the c-set
/// twice (b >= 2 and c >= 2).
bool check_sandwich_inequality(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace orelab
