#include "orelab/setcore.hpp"

#include <bit>
#include <stdexcept>

namespace orelab {

namespace {

int countr_zero_128(uint128 v) {
    auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(v >> 64));
}

}  // namespace

ExactInt binom(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return ExactInt{0};
    if (b == 0 || b == a) return ExactInt{1};
    if (b > a - b) b = a - b;
    // r starts at C(a-b, 0) and moves to C(a-b+i, i); every division is exact.
    ExactInt r{1};
    for (std::int64_t i = 1; i <= b; ++i) {
        r = (r * ExactInt{static_cast<std::uint64_t>(a - b + i)})
                .exact_div(ExactInt{static_cast<std::uint64_t>(i)});
    }
    return r;
}

SubsetStream::SubsetStream(int n, int r) {
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("SubsetStream: n outside 0.." +
                                    std::to_string(VertexSet::max_vertices));
    if (r < 0 || r > n) throw std::invalid_argument("SubsetStream: need 0 <= r <= n");
    remaining_ = binom(n, r).to_u64();
    cur_ = r == 0 ? uint128{0} : (r == 128 ? ~uint128{0} : ((uint128{1} << r) - 1));
}

uint128 SubsetStream::gosper_next(uint128 cur) {
    uint128 low = cur & (~cur + 1);
    uint128 ripple = cur + low;
    uint128 changed = cur ^ ripple;
    return ripple | (changed >> (countr_zero_128(low) + 2));
}

VertexSet SubsetStream::next() {
    if (remaining_ == 0) throw std::logic_error("SubsetStream: exhausted");
    VertexSet out = VertexSet::from_mask(cur_);
    --remaining_;
    if (remaining_ != 0 && cur_ != 0) cur_ = gosper_next(cur_);
    return out;
}

VertexSet subset_at(int n, int r, std::uint64_t k) {
    if (r < 0 || r > n) throw std::invalid_argument("subset_at: need 0 <= r <= n");
    if (ExactInt{k} >= binom(n, r)) throw std::out_of_range("subset_at: rank out of range");
    // Colex unranking: the i-th largest element c satisfies C(c, i) <= k maximal.
    VertexSet out;
    ExactInt rem{k};
    int c = n - 1;
    for (int i = r; i >= 1; --i) {
        while (binom(c, i) > rem) --c;
        out.insert(c + 1);
        rem -= binom(c, i);
        --c;
    }
    return out;
}

std::uint64_t subset_rank(VertexSet s) {
    ExactInt rank{0};
    int i = 0;
    s.for_each([&](int v) {
        ++i;
        rank += binom(v - 1, i);
    });
    return rank.to_u64();
}

namespace {

ExactInt u(std::int64_t v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string("eval_bound: negative ") + what);
    return ExactInt{static_cast<std::uint64_t>(v)};
}

ExactInt max_of(ExactInt a, ExactInt b) { return a > b ? a : b; }

}  // namespace

ExactInt eval_bound(BoundId id, BoundParams p) { return eval_bound(BoundFormula{id, p}); }

ExactInt eval_bound(const BoundFormula& f) {
    const auto& p = f.params;
    const std::int64_t n = p.n, r = p.r, s = p.s, t = p.t, ell = p.ell, i = p.i;
    switch (f.id) {
        case BoundId::EKR_ORE:
            return u(r, "r") * binom(n - 2, r - 2);
        case BoundId::HM_ORE:
            return u(r, "r") * (binom(n - 2, r - 2) - binom(n - r - 2, r - 2));
        case BoundId::MATCH_ORE:
            if (s < 1) throw std::invalid_argument("eval_bound: MATCH_ORE needs s >= 1");
            return u(r, "r") * (binom(n - 1, r - 1) - binom(n - s, r - 1));
        case BoundId::ERDOS_EDGE:
            if (s < 1) throw std::invalid_argument("eval_bound: ERDOS_EDGE needs s >= 1");
            return max_of(binom(r * s - 1, r), binom(n, r) - binom(n - (s - 1), r));
        case BoundId::HM_SIZE:
            return binom(n - 1, r - 1) - binom(n - r - 1, r - 1) + ExactInt{1};
        case BoundId::COVER_SIZE:
            if (s < 1) throw std::invalid_argument("eval_bound: COVER_SIZE needs s >= 1");
            return binom(n, r) - binom(n - (s - 1), r);
        case BoundId::CLIQUE_SIZE:
            if (s < 1) throw std::invalid_argument("eval_bound: CLIQUE_SIZE needs s >= 1");
            return binom(r * s - 1, r);
        case BoundId::REGULAR_CAP: {
            if (n < r) throw std::invalid_argument("eval_bound: REGULAR_CAP needs n >= r");
            ExactInt d = u(r, "r") * u(r >= 1 ? r - 1 : 0, "r") * u(r >= 2 ? r - 2 : 0, "r");
            std::int64_t m = n - r;
            ExactInt q = u(m, "n-r") * u(m >= 1 ? m - 1 : 0, "n-r") * u(m >= 2 ? m - 2 : 0, "n-r");
            ExactInt denom = d + q;
            if (denom.is_zero()) return binom(n, r);  // degenerate: no constraint
            return (binom(n, r) * d).floor_div(denom);
        }
        case BoundId::WILSON_CAP:
            if (t < 0) throw std::invalid_argument("eval_bound: WILSON_CAP needs t >= 0");
            return binom(n - t, r - t);
        case BoundId::THIRD_FAMILY_CAP:
            return binom(n - 1, r - 1) - binom(n - r - 1, r - 1) - binom(n - r - 2, r - 2) +
                   ExactInt{2};
        case BoundId::CROSS_NONTRIV_CAP:
            return (binom(n - 1, r - 1) + ExactInt{1}) *
                   (binom(n - 1, r - 1) - binom(n - r - 1, r - 1));
        case BoundId::THREE_TRANSVERSAL_CAP:
            if (ell < 0) throw std::invalid_argument("eval_bound: needs ell >= 0");
            return u(ell, "ell") * u(ell, "ell") * binom(n - 3, r - 3);
        case BoundId::FRANKL_MAXDEG_CAP:
            if (i < 0) throw std::invalid_argument("eval_bound: needs i >= 0");
            return binom(n - 1, r - 1) - binom(n - i - 1, r - 1) + binom(n - i - 1, r - i);
    }
    throw std::logic_error("eval_bound: unknown formula id");
}

const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::EKR_ORE: return "EKR_ORE";
        case BoundId::HM_ORE: return "HM_ORE";
        case BoundId::MATCH_ORE: return "MATCH_ORE";
        case BoundId::ERDOS_EDGE: return "ERDOS_EDGE";
        case BoundId::HM_SIZE: return "HM_SIZE";
        case BoundId::COVER_SIZE: return "COVER_SIZE";
        case BoundId::CLIQUE_SIZE: return "CLIQUE_SIZE";
        case BoundId::REGULAR_CAP: return "REGULAR_CAP";
        case BoundId::WILSON_CAP: return "WILSON_CAP";
        case BoundId::THIRD_FAMILY_CAP: return "THIRD_FAMILY_CAP";
        case BoundId::CROSS_NONTRIV_CAP: return "CROSS_NONTRIV_CAP";
        case BoundId::THREE_TRANSVERSAL_CAP: return "THREE_TRANSVERSAL_CAP";
        case BoundId::FRANKL_MAXDEG_CAP: return "FRANKL_MAXDEG_CAP";
    }
    return "?";
}

bool check_sandwich_inequality(std::int64_t a, std::int64_t b, std::int64_t c) {
    ExactInt upper = u(c < 0 ? 0 : c, "c") * binom(a - 1, b - 1);
    ExactInt lower = u(c < 0 ? 0 : c, "c") * binom(a - c, b - 1);
    ExactInt whole = binom(a, b);
    ExactInt avoid = binom(a - c, b);
    if (avoid > whole) return false;  // only when c < 0
    ExactInt middle = whole - avoid;
    return upper > middle && middle > lower;
}

}  // namespace orelab
