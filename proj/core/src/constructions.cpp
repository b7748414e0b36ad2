#include "orelab/constructions.hpp"

#include <stdexcept>

namespace orelab {

namespace {

void check_size(const Hypergraph& h, ExactInt expect, const char* what) {
    if (ExactInt{h.edge_count()} != expect)
        throw std::logic_error(std::string(what) + ": generated " +
                               std::to_string(h.edge_count()) + " edges, closed form says " +
                               expect.str());
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Hypergraph one_star(int n, int r, int x) {
    require(r >= 1 && n >= r, "one_star: need n >= r >= 1");
    require(x >= 1 && x <= n, "one_star: center outside [n]");
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](VertexSet s) {
        if (s.contains(x)) edges.push_back(s);
    });
    auto h = Hypergraph::from_edge_sets(n, r, std::move(edges));
    check_size(h, binom(n - 1, r - 1), "one_star");
    return h;
}

Hypergraph hilton_milner(int n, int r, int x, VertexSet s) {
    require(n >= 2 * r, "hilton_milner: need n >= 2r");
    require(s.size() == r, "hilton_milner: |S| must equal r");
    require(x >= 1 && x <= n && !s.contains(x), "hilton_milner: need x in [n], x not in S");
    require(s.subset_of(VertexSet::range(1, n)), "hilton_milner: S leaves [n]");
    std::vector<VertexSet> edges{s};
    for_each_subset(n, r, [&](VertexSet e) {
        if (e.contains(x) && e.intersects(s)) edges.push_back(e);
    });
    auto h = Hypergraph::from_edge_sets(n, r, std::move(edges));
    check_size(h, eval_bound(BoundId::HM_SIZE, {.n = n, .r = r}), "hilton_milner");
    return h;
}

Hypergraph cover_family(int n, int r, VertexSet t) {
    require(t.size() >= 1, "cover_family: need |T| >= 1");
    require(n >= r && r >= 1, "cover_family: need n >= r >= 1");
    require(t.subset_of(VertexSet::range(1, n)), "cover_family: T leaves [n]");
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](VertexSet e) {
        if (e.intersects(t)) edges.push_back(e);
    });
    auto h = Hypergraph::from_edge_sets(n, r, std::move(edges));
    check_size(h, binom(n, r) - binom(n - t.size(), r), "cover_family");
    return h;
}

Hypergraph clique_family(int n, int r, VertexSet w) {
    require(w.size() >= r && r >= 1, "clique_family: need |W| >= r >= 1");
    require(w.subset_of(VertexSet::range(1, n)), "clique_family: W leaves [n]");
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](VertexSet e) {
        if (e.subset_of(w)) edges.push_back(e);
    });
    auto h = Hypergraph::from_edge_sets(n, r, std::move(edges));
    check_size(h, binom(w.size(), r), "clique_family");
    return h;
}

Hypergraph t_star(int n, int r, VertexSet t_set) {
    const int t = t_set.size();
    require(t >= 1 && t <= r && r <= n, "t_star: need 1 <= |t_set| <= r <= n");
    require(t_set.subset_of(VertexSet::range(1, n)), "t_star: t_set leaves [n]");
    std::vector<VertexSet> edges;
    for_each_subset(n, r, [&](VertexSet e) {
        if (t_set.subset_of(e)) edges.push_back(e);
    });
    auto h = Hypergraph::from_edge_sets(n, r, std::move(edges));
    check_size(h, binom(n - t, r - t), "t_star");
    return h;
}

Hypergraph perfect_matching(int n, int r) {
    require(r >= 1 && n >= r, "perfect_matching: need n >= r >= 1");
    std::vector<VertexSet> edges;
    for (int lo = 1; lo + r - 1 <= n; lo += r) edges.push_back(VertexSet::range(lo, lo + r - 1));
    auto h = Hypergraph::from_edge_sets(n, r, std::move(edges));
    check_size(h, ExactInt{static_cast<std::uint64_t>(n / r)}, "perfect_matching");
    return h;
}

Hypergraph fano() {
    // Standard presentation of the order-2 projective plane.
    const std::vector<std::vector<int>> lines = {
        {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
    };
    auto h = Hypergraph::build(7, 3, lines);
    check_size(h, ExactInt{7}, "fano");
    return h;
}

const char* construction_name(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::ONE_STAR: return "star";
        case ConstructionKind::HILTON_MILNER: return "hm";
        case ConstructionKind::COVER: return "cover";
        case ConstructionKind::CLIQUE: return "clique";
        case ConstructionKind::PERFECT_MATCHING: return "pm";
        case ConstructionKind::FANO: return "fano";
        case ConstructionKind::T_STAR: return "tstar";
    }
    return "?";
}

Hypergraph generate(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::ONE_STAR:
            return one_star(spec.n, spec.r, spec.x);
        case ConstructionKind::HILTON_MILNER: {
            VertexSet s = spec.base ? *spec.base
                                    : VertexSet::range(spec.x + 1, spec.x + spec.r);
            return hilton_milner(spec.n, spec.r, spec.x, s);
        }
        case ConstructionKind::COVER:
            require(spec.cover.has_value(), "cover: missing transversal set T");
            return cover_family(spec.n, spec.r, *spec.cover);
        case ConstructionKind::CLIQUE:
            require(spec.support.has_value(), "clique: missing support W");
            return clique_family(spec.n, spec.r, *spec.support);
        case ConstructionKind::PERFECT_MATCHING:
            return perfect_matching(spec.n, spec.r);
        case ConstructionKind::FANO:
            return fano();
        case ConstructionKind::T_STAR:
            require(spec.t_set.has_value(), "tstar: missing fixed t-set");
            return t_star(spec.n, spec.r, *spec.t_set);
    }
    throw std::logic_error("generate: unknown construction kind");
}

}  // namespace orelab
