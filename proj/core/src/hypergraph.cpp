#include "orelab/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace orelab {

Hypergraph Hypergraph::build(int n, int r, const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet s;
        for (int v : e) {
            if (v < 1 || v > n)
                throw std::invalid_argument("Hypergraph: vertex " + std::to_string(v) +
                                            " outside 1.." + std::to_string(n));
            s.insert(v);
        }
        if (s.size() != r)
            throw std::invalid_argument("Hypergraph: edge has " + std::to_string(s.size()) +
                                        " distinct vertices, expected " + std::to_string(r));
        sets.push_back(s);
    }
    return from_edge_sets(n, r, std::move(sets));
}

Hypergraph Hypergraph::from_edge_sets(int n, int r, std::vector<VertexSet> edges) {
    if (n < 0 || n > VertexSet::max_vertices)
        throw std::invalid_argument("Hypergraph: n outside 0.." +
                                    std::to_string(VertexSet::max_vertices));
    if (r < 0) throw std::invalid_argument("Hypergraph: negative r");
    const VertexSet universe = VertexSet::range(1, n);
    for (VertexSet e : edges) {
        if (e.size() != r) throw std::invalid_argument("Hypergraph: edge of wrong size");
        if (!e.subset_of(universe))
            throw std::invalid_argument("Hypergraph: edge leaves the vertex universe");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(n), 0);
    for (VertexSet e : edges)
        e.for_each([&](int v) { ++deg[static_cast<std::size_t>(v - 1)]; });
    return Hypergraph(n, r, std::move(edges), std::move(deg));
}

std::uint64_t Hypergraph::degree(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("Hypergraph: vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n_));
    return deg_[static_cast<std::size_t>(v - 1)];
}

std::uint64_t Hypergraph::min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(deg_.begin(), deg_.end());
}

std::uint64_t Hypergraph::max_degree() const {
    if (n_ == 0) return 0;
    return *std::max_element(deg_.begin(), deg_.end());
}

bool Hypergraph::has_edge(VertexSet e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::uint64_t Hypergraph::digest() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    mix(static_cast<std::uint64_t>(r_));
    for (VertexSet e : edges_) {
        mix(static_cast<std::uint64_t>(e.mask()));
        mix(static_cast<std::uint64_t>(e.mask() >> 64));
    }
    return h;
}

ExactInt set_degree(const Hypergraph& h, VertexSet s) {
    if (!s.subset_of(VertexSet::range(1, h.n())))
        throw std::out_of_range("set_degree: set leaves the vertex universe");
    std::uint64_t sum = 0;  // at most 128 * |edges|, cannot wrap
    s.for_each([&](int v) { sum += h.degree(v); });
    return ExactInt{sum};
}

namespace {

struct ScanResult {
    bool found = false;
    std::uint64_t best = 0;
    VertexSet witness;
};

// Scan ranks [lo, hi) of the colex subset stream; edges skipped by merged
// scan against the sorted edge list.
ScanResult ore_scan_range(const Hypergraph& h, std::uint64_t lo, std::uint64_t hi) {
    ScanResult res;
    if (lo >= hi) return res;
    const auto& edges = h.edges();
    VertexSet first = subset_at(h.n(), h.r(), lo);
    std::size_t eptr =
        static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), first) -
                                 edges.begin());
    uint128 cur = first.mask();
    for (std::uint64_t k = lo; k < hi; ++k) {
        VertexSet s = VertexSet::from_mask(cur);
        while (eptr < edges.size() && edges[eptr] < s) ++eptr;
        if (eptr < edges.size() && edges[eptr] == s) {
            ++eptr;
        } else {
            std::uint64_t d = 0;
            s.for_each([&](int v) { d += h.degree(v); });
            if (!res.found || d < res.best) {
                res.found = true;
                res.best = d;
                res.witness = s;
            }
        }
        if (k + 1 < hi) cur = SubsetStream::gosper_next(cur);
    }
    return res;
}

}  // namespace

OreDegreeResult ore_degree(const Hypergraph& h, int workers) {
    const std::uint64_t total = binom(h.n(), h.r()).to_u64();
    const std::uint64_t non_edges = total - h.edge_count();
    if (non_edges == 0) return {OreDegree::unbounded(), std::nullopt};

    if (workers < 1) workers = 1;
    const auto w = static_cast<std::uint64_t>(workers);
    std::vector<ScanResult> parts(w);
    if (w == 1 || total < 1024) {
        parts[0] = ore_scan_range(h, 0, total);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(w);
        for (std::uint64_t i = 0; i < w; ++i) {
            std::uint64_t lo = total / w * i + std::min(i, total % w);
            std::uint64_t hi = lo + total / w + (i < total % w ? 1 : 0);
            threads.emplace_back(
                [&h, &parts, i, lo, hi] { parts[i] = ore_scan_range(h, lo, hi); });
        }
        for (auto& t : threads) t.join();
    }

    // Merge in rank order: strict minimum wins, earlier chunk breaks ties,
    // so the witness is the smallest-mask minimizer regardless of workers.
    ScanResult merged;
    for (const auto& p : parts) {
        if (!p.found) continue;
        if (!merged.found || p.best < merged.best) merged = p;
    }
    return {OreDegree::finite(ExactInt{merged.best}), merged.witness};
}

Hypergraph link(const Hypergraph& h, int x) {
    if (h.r() == 0) throw std::invalid_argument("link: undefined for 0-uniform hypergraphs");
    if (x < 1 || x > h.n()) throw std::out_of_range("link: vertex outside universe");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (e.contains(x)) out.push_back(e.without(x));
    return Hypergraph::from_edge_sets(h.n(), h.r() - 1, std::move(out));
}

IntersectingResult is_intersecting(const Hypergraph& h) {
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].disjoint(edges[j])) return {false, std::make_pair(edges[i], edges[j])};
    return {true, std::nullopt};
}

int min_pairwise_intersection(const Hypergraph& h) {
    const auto& edges = h.edges();
    if (edges.size() < 2)
        throw std::invalid_argument("min_pairwise_intersection: needs at least two edges");
    int best = h.r();
    for (std::size_t i = 0; i < edges.size() && best > 0; ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int t = (edges[i] & edges[j]).size();
            if (t < best) {
                best = t;
                if (best == 0) break;
            }
        }
    return best;
}

CrossIntersectingResult is_cross_intersecting(const Hypergraph& a, const Hypergraph& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("is_cross_intersecting: vertex universes differ");
    for (VertexSet ea : a.edges())
        for (VertexSet eb : b.edges())
            if (ea.disjoint(eb)) return {false, std::make_pair(ea, eb)};
    return {true, std::nullopt};
}

std::optional<int> is_trivial_star(const Hypergraph& h) {
    if (h.empty()) throw std::invalid_argument("is_trivial_star: empty hypergraph");
    VertexSet common = h.edges().front();
    for (VertexSet e : h.edges()) common = common & e;
    if (common.empty()) return std::nullopt;
    return common.min_vertex();
}

std::optional<HmWitness> is_hm_subfamily(const Hypergraph& h) {
    const auto& edges = h.edges();
    const VertexSet universe = VertexSet::range(1, h.n());
    const std::size_t m = edges.size();
    // Prefix/suffix AND folds give the common intersection of all edges
    // except one in O(m).
    std::vector<VertexSet> prefix(m + 1, universe), suffix(m + 1, universe);
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] & edges[i];
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] & edges[i];
    for (std::size_t i = 0; i < m; ++i) {
        const VertexSet s = edges[i];
        bool all_meet_s = true;
        for (std::size_t j = 0; j < m && all_meet_s; ++j)
            if (j != i && edges[j].disjoint(s)) all_meet_s = false;
        if (!all_meet_s) continue;
        VertexSet centers = (prefix[i] & suffix[i + 1]) - s;
        if (!centers.empty()) return HmWitness{centers.min_vertex(), s};
    }
    return std::nullopt;
}

std::optional<std::uint64_t> is_regular(const Hypergraph& h) {
    if (h.n() == 0) return 0;
    std::uint64_t d = h.degree(1);
    for (int v = 2; v <= h.n(); ++v)
        if (h.degree(v) != d) return std::nullopt;
    return d;
}

std::optional<std::pair<std::size_t, std::size_t>> proper_coloring_violation(
    const Hypergraph& h, const std::vector<int>& colors) {
    if (colors.size() != h.edge_count())
        throw std::invalid_argument("coloring: length does not match edge count");
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (colors[i] == colors[j] && edges[i].intersects(edges[j]))
                return std::make_pair(i, j);
    return std::nullopt;
}

bool validate_proper_coloring(const Hypergraph& h, const std::vector<int>& colors) {
    return !proper_coloring_violation(h, colors).has_value();
}

ColoredHypergraph::ColoredHypergraph(Hypergraph base, std::vector<int> colors)
    : base_(std::move(base)), colors_(std::move(colors)) {
    if (auto bad = proper_coloring_violation(base_, colors_)) {
        throw std::invalid_argument("ColoredHypergraph: improper coloring, edges " +
                                    std::to_string(bad->first + 1) + " and " +
                                    std::to_string(bad->second + 1) + " share a vertex and color");
    }
}

}  // namespace orelab
