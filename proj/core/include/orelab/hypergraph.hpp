#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orelab/exact_int.hpp"
#include "orelab/setcore.hpp"
#include "orelab/vertex_set.hpp"

namespace orelab {

/// sigma_r: minimum of deg(S) over non-edge r-sets. Unbounded exactly when
/// the hypergraph is complete (the minimization domain is empty), and
/// Unbounded compares strictly greater than every finite value.
class OreDegree {
public:
    static OreDegree finite(ExactInt v) { return OreDegree(false, v); }
    static OreDegree unbounded() { return OreDegree(true, ExactInt{0}); }

    bool is_unbounded() const { return unbounded_; }
    ExactInt value() const {
        if (unbounded_) throw std::logic_error("OreDegree: unbounded has no value");
        return value_;
    }

    friend bool operator==(const OreDegree& a, const OreDegree& b) {
        return a.unbounded_ == b.unbounded_ && (a.unbounded_ || a.value_ == b.value_);
    }
    friend bool operator!=(const OreDegree& a, const OreDegree& b) { return !(a == b); }
    friend bool operator<(const OreDegree& a, const OreDegree& b) {
        if (a.unbounded_) return false;
        if (b.unbounded_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const OreDegree& a, const OreDegree& b) { return a < b || a == b; }
    friend bool operator>(const OreDegree& a, const OreDegree& b) { return b < a; }
    friend bool operator>=(const OreDegree& a, const OreDegree& b) { return b <= a; }

    bool exceeds(ExactInt bound) const { return unbounded_ || value_ > bound; }

    std::string str() const { return unbounded_ ? "unbounded" : value_.str(); }

private:
    OreDegree(bool ub, ExactInt v) : unbounded_(ub), value_(v) {}
    bool unbounded_;
    ExactInt value_;
};

/// r-uniform hypergraph on vertex set {1..n}: canonically sorted,
/// duplicate-free edge list plus a cached degree profile.
class Hypergraph {
public:
    /// Canonical constructor from 1-based vertex lists. Duplicate input
    /// edges collapse; wrong edge size or out-of-range vertices throw.
    static Hypergraph build(int n, int r, const std::vector<std::vector<int>>& edges);

    /// Same contract, edges already given as bitmasks.
    static Hypergraph from_edge_sets(int n, int r, std::vector<VertexSet> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    std::uint64_t degree(int v) const;
    const std::vector<std::uint64_t>& degrees() const { return deg_; }
    std::uint64_t min_degree() const;
    std::uint64_t max_degree() const;

    bool has_edge(VertexSet e) const;

    /// Number of r-subsets of [n] that are not edges.
    ExactInt non_edge_count() const { return binom(n_, r_) - ExactInt{edge_count()}; }
    bool is_complete() const { return non_edge_count().is_zero(); }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

    /// FNV-1a over (n, r, edge masks); stable across runs.
    std::uint64_t digest() const;

private:
    Hypergraph(int n, int r, std::vector<VertexSet> edges, std::vector<std::uint64_t> deg)
        : n_(n), r_(r), edges_(std::move(edges)), deg_(std::move(deg)) {}

    int n_ = 0;
    int r_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<std::uint64_t> deg_;  // deg_[v-1]
};

/// deg(S) = sum of deg(v) over v in S. S may have any size.
ExactInt set_degree(const Hypergraph& h, VertexSet s);

struct OreDegreeResult {
    OreDegree sigma;
    std::optional<VertexSet> witness;  // smallest-mask minimizing non-edge
};

/// Exact sigma_r by scanning all r-subsets in canonical order, skipping
/// edges via a merged scan of the sorted edge list. With workers > 1 the
/// stream is partitioned by colex rank; the result (including the witness
/// tie-break) is identical for every worker count.
OreDegreeResult ore_degree(const Hypergraph& h, int workers = 1);

/// Link H(x): edges through x with x removed, on the same vertex set.
Hypergraph link(const Hypergraph& h, int x);

struct IntersectingResult {
    bool intersecting;
    std::optional<std::pair<VertexSet, VertexSet>> disjoint_pair;  // canonical first
    explicit operator bool() const { return intersecting; }
};

IntersectingResult is_intersecting(const Hypergraph& h);

/// Minimum |E ∩ E'| over distinct edge pairs; needs at least two edges.
int min_pairwise_intersection(const Hypergraph& h);

struct CrossIntersectingResult {
    bool cross_intersecting;
    std::optional<std::pair<VertexSet, VertexSet>> witness;  // (a-edge, b-edge)
    explicit operator bool() const { return cross_intersecting; }
};

CrossIntersectingResult is_cross_intersecting(const Hypergraph& a, const Hypergraph& b);

/// Smallest vertex contained in every edge, if any (AND-fold of the edge
/// masks). Errors on the empty hypergraph.
std::optional<int> is_trivial_star(const Hypergraph& h);

struct HmWitness {
    int x;
    VertexSet base_edge;
};

/// Some (x, S) with S an edge, x not in S, such that every edge either
/// equals S or contains x and meets S; scans S in canonical edge order,
/// then x ascending. Under this reading a full 1-star is not an
/// HM-subfamily (every candidate S contains the center).
std::optional<HmWitness> is_hm_subfamily(const Hypergraph& h);

/// Common degree when all n vertex degrees agree.
std::optional<std::uint64_t> is_regular(const Hypergraph& h);

/// First pair of intersecting edges with equal colors, in canonical index
/// order; std::nullopt means the coloring is proper. Length mismatch throws.
std::optional<std::pair<std::size_t, std::size_t>> proper_coloring_violation(
    const Hypergraph& h, const std::vector<int>& colors);

bool validate_proper_coloring(const Hypergraph& h, const std::vector<int>& colors);

/// Hypergraph plus one color id per edge (aligned with canonical edge
/// order), validated proper at construction.
class ColoredHypergraph {
public:
    ColoredHypergraph(Hypergraph base, std::vector<int> colors);

    const Hypergraph& base() const { return base_; }
    const std::vector<int>& colors() const { return colors_; }
    int color_of(std::size_t edge_index) const { return colors_.at(edge_index); }

private:
    Hypergraph base_;
    std::vector<int> colors_;
};

}  // namespace orelab
