#pragma once

#include <optional>
#include <vector>

#include "orelab/hypergraph.hpp"

namespace orelab {

/// Pairwise disjoint edges of a source hypergraph.
struct Matching {
    std::vector<VertexSet> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

struct MaxMatchingResult {
    int nu;
    Matching witness;
};

/// Exact matching number (maximum set packing) with a witness.
/// Branch and bound: branch include/exclude on the first available edge
/// covering the lowest-index coverable vertex; prune with
/// current + floor(free/r) and a greedy completion incumbent.
MaxMatchingResult max_matching(const Hypergraph& h);

/// Decision variant: a matching of size exactly s if one exists (search
/// stops as soon as s disjoint edges are found).
std::optional<Matching> has_matching(const Hypergraph& h, int s);

/// Pairwise disjoint edges e_1..e_s with roots[i] in e_i, if any exist.
/// Backtracking assigns the most-constrained root first; the returned
/// edges are aligned with the input root order. Duplicate roots throw.
std::optional<Matching> rooted_matching(const Hypergraph& h, const std::vector<int>& roots);

struct RainbowPick {
    int family;  // 0-based index into the input list
    VertexSet edge;
    int color;
};

struct RainbowAssignment {
    std::vector<RainbowPick> picks;
};

/// s-rainbow matching: pairwise disjoint edges of pairwise distinct colors,
/// one per family, picked by backtracking in the given family order.
/// All families must share the vertex universe.
std::optional<RainbowAssignment> rainbow_matching(const std::vector<ColoredHypergraph>& families);

struct ArrowResult {
    bool holds;
    int color = 0;      // 1-based color class achieving its target size
    Matching witness;   // monochromatic matching in that class
};

/// Whether some color class i of the given edge coloring contains a
/// matching of size sizes[i-1]. Coloring values must lie in [1, c] with
/// c = sizes.size(); sizes must be non-increasing and positive.
ArrowResult arrow_check(const Hypergraph& h, const std::vector<int>& coloring,
                        const std::vector<int>& sizes);

}  // namespace orelab
