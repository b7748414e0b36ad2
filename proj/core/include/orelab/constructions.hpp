#pragma once

#include <optional>
#include <string>

#include "orelab/hypergraph.hpp"

namespace orelab {

/// Named extremal families. Every generator validates its own edge count
/// against the closed form before returning.

/// All r-subsets of [n] containing x; C(n-1, r-1) edges.
Hypergraph one_star(int n, int r, int x);

/// The base edge S plus all r-sets containing x (x not in S) that meet S;
/// C(n-1,r-1) - C(n-r-1,r-1) + 1 edges. Needs n >= 2r.
Hypergraph hilton_milner(int n, int r, int x, VertexSet s);

/// All r-sets meeting T; C(n,r) - C(n-|T|,r) edges. With |T| = s-1 the
/// matching number is s-1.
Hypergraph cover_family(int n, int r, VertexSet t);

/// All r-subsets of the support W; with |W| = rs-1 the matching number is s-1.
Hypergraph clique_family(int n, int r, VertexSet w);

/// All r-sets containing the fixed t_set; C(n-t, r-t) edges, t-intersecting.
Hypergraph t_star(int n, int r, VertexSet t_set);

/// floor(n/r) pairwise disjoint consecutive blocks {1..r}, {r+1..2r}, ...
Hypergraph perfect_matching(int n, int r);

/// The 7-point, 7-line projective plane as a 3-uniform hypergraph on [7];
/// regular of degree 3 and intersecting.
Hypergraph fano();

enum class ConstructionKind {
    ONE_STAR,
    HILTON_MILNER,
    COVER,
    CLIQUE,
    PERFECT_MATCHING,
    FANO,
    T_STAR,
};

const char* construction_name(ConstructionKind k);

/// Parameter record for the CLI and the tightness verifier. Fields beyond
/// (kind, n, r) apply only where the construction uses them; defaults are
/// the lexicographically first placement.
struct ConstructionSpec {
    ConstructionKind kind;
    int n = 0;
    int r = 0;
    int x = 1;                        // star / HM center
    std::optional<VertexSet> base;    // HM base edge S
    std::optional<VertexSet> cover;   // COVER transversal T
    std::optional<VertexSet> support; // CLIQUE support W
    std::optional<VertexSet> t_set;   // T_STAR fixed set
};

Hypergraph generate(const ConstructionSpec& spec);

}  // namespace orelab
