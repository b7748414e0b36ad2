#include "orelab/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace orelab {

namespace {

// One engine for max_matching and has_matching: `target` < 0 means find the
// true maximum, otherwise stop as soon as `target` disjoint edges are known.
class PackingSearch {
public:
    PackingSearch(const Hypergraph& h, int target)
        : h_(h), edges_(h.edges()), target_(target), excluded_(edges_.size(), 0) {}

    MaxMatchingResult run() {
        best_ = 0;
        best_witness_.clear();
        std::vector<VertexSet> cur;
        dfs(VertexSet{}, cur);
        Matching m;
        m.edges = best_witness_;
        return {best_, std::move(m)};
    }

private:
    bool done() const { return target_ >= 0 && best_ >= target_; }

    void record(const std::vector<VertexSet>& m) {
        if (static_cast<int>(m.size()) > best_) {
            best_ = static_cast<int>(m.size());
            best_witness_ = m;
        }
    }

    void dfs(VertexSet used, std::vector<VertexSet>& cur) {
        if (done()) return;

        // Greedy completion: extends the incumbent cheaply. Exclusions are
        // branching state, not structural, so the greedy run may use them;
        // any disjoint edge set is a valid matching of h.
        {
            std::vector<VertexSet> g = cur;
            VertexSet gu = used;
            for (VertexSet e : edges_)
                if (e.disjoint(gu)) {
                    g.push_back(e);
                    gu = gu | e;
                }
            record(g);
            if (done()) return;
        }

        // Upper bound: even packing every free vertex cannot beat best_.
        const int free = h_.n() - used.size();
        if (h_.r() > 0 && static_cast<int>(cur.size()) + free / h_.r() <= best_) return;

        // Pivot: first available edge through the lowest coverable vertex.
        int pivot_vertex = 0;
        std::size_t pivot_edge = edges_.size();
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (excluded_[i] || !edges_[i].disjoint(used)) continue;
            int v = (edges_[i] - used).min_vertex();
            if (pivot_vertex == 0 || v < pivot_vertex) {
                pivot_vertex = v;
                pivot_edge = i;
            }
        }
        if (pivot_edge == edges_.size()) return;  // leaf; greedy already recorded

        // Include.
        cur.push_back(edges_[pivot_edge]);
        dfs(used | edges_[pivot_edge], cur);
        cur.pop_back();
        if (done()) return;

        // Exclude.
        excluded_[pivot_edge] = 1;
        dfs(used, cur);
        excluded_[pivot_edge] = 0;
    }

    const Hypergraph& h_;
    const std::vector<VertexSet>& edges_;
    int target_;
    std::vector<char> excluded_;
    int best_ = 0;
    std::vector<VertexSet> best_witness_;
};

}  // namespace

MaxMatchingResult max_matching(const Hypergraph& h) {
    if (h.empty()) return {0, Matching{}};
    if (h.r() == 0) return {0, Matching{}};  // only the empty edge exists
    return PackingSearch(h, -1).run();
}

std::optional<Matching> has_matching(const Hypergraph& h, int s) {
    if (s < 0) throw std::invalid_argument("has_matching: negative target");
    if (s == 0) return Matching{};
    if (h.empty() || h.r() == 0) return std::nullopt;
    if (s > h.n() / h.r()) return std::nullopt;
    auto res = PackingSearch(h, s).run();
    if (res.nu < s) return std::nullopt;
    res.witness.edges.resize(static_cast<std::size_t>(s));
    return res.witness;
}

std::optional<Matching> rooted_matching(const Hypergraph& h, const std::vector<int>& roots) {
    if (roots.empty()) throw std::invalid_argument("rooted_matching: needs at least one root");
    for (int v : roots)
        if (v < 1 || v > h.n()) throw std::out_of_range("rooted_matching: root outside [n]");
    {
        auto sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("rooted_matching: duplicate roots");
    }

    const std::size_t s = roots.size();
    std::vector<VertexSet> picks(s);
    std::vector<char> assigned(s, 0);

    // Candidate edges through each root, canonical order preserved.
    std::vector<std::vector<VertexSet>> through(s);
    for (std::size_t i = 0; i < s; ++i)
        for (VertexSet e : h.edges())
            if (e.contains(roots[i])) through[i].push_back(e);

    auto count_available = [&](std::size_t i, VertexSet used) {
        std::size_t c = 0;
        for (VertexSet e : through[i])
            if (e.disjoint(used)) ++c;
        return c;
    };

    std::function<bool(std::size_t, VertexSet)> rec = [&](std::size_t depth,
                                                          VertexSet used) -> bool {
        if (depth == s) return true;
        // Most-constrained root first; smallest position breaks ties.
        std::size_t pick = s;
        std::size_t pick_count = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (assigned[i]) continue;
            std::size_t c = count_available(i, used);
            if (pick == s || c < pick_count) {
                pick = i;
                pick_count = c;
            }
        }
        if (pick_count == 0) return false;
        assigned[pick] = 1;
        for (VertexSet e : through[pick]) {
            if (!e.disjoint(used)) continue;
            picks[pick] = e;
            if (rec(depth + 1, used | e)) return true;
        }
        assigned[pick] = 0;
        return false;
    };

    if (!rec(0, VertexSet{})) return std::nullopt;
    Matching m;
    m.edges = picks;
    return m;
}

std::optional<RainbowAssignment> rainbow_matching(
    const std::vector<ColoredHypergraph>& families) {
    if (families.empty()) return RainbowAssignment{};
    const int n = families.front().base().n();
    for (const auto& f : families)
        if (f.base().n() != n)
            throw std::invalid_argument("rainbow_matching: vertex universes differ");

    const std::size_t s = families.size();
    std::vector<RainbowPick> picks;
    picks.reserve(s);

    std::function<bool(std::size_t, VertexSet)> rec = [&](std::size_t i, VertexSet used) -> bool {
        if (i == s) return true;
        const auto& fam = families[i];
        const auto& edges = fam.base().edges();
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (!edges[j].disjoint(used)) continue;
            const int color = fam.colors()[j];
            bool color_used = false;
            for (const auto& p : picks)
                if (p.color == color) {
                    color_used = true;
                    break;
                }
            if (color_used) continue;
            picks.push_back({static_cast<int>(i), edges[j], color});
            if (rec(i + 1, used | edges[j])) return true;
            picks.pop_back();
        }
        return false;
    };

    if (!rec(0, VertexSet{})) return std::nullopt;
    return RainbowAssignment{picks};
}

ArrowResult arrow_check(const Hypergraph& h, const std::vector<int>& coloring,
                        const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("arrow_check: empty size vector");
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] < sizes[i + 1])
            throw std::invalid_argument("arrow_check: sizes must be non-increasing");
    for (int v : sizes)
        if (v < 1) throw std::invalid_argument("arrow_check: sizes must be positive");
    if (coloring.size() != h.edge_count())
        throw std::invalid_argument("arrow_check: coloring length does not match edge count");
    const int c = static_cast<int>(sizes.size());
    for (int v : coloring)
        if (v < 1 || v > c) throw std::invalid_argument("arrow_check: color outside [1, c]");

    for (int color = 1; color <= c; ++color) {
        std::vector<VertexSet> cls;
        for (std::size_t i = 0; i < coloring.size(); ++i)
            if (coloring[i] == color) cls.push_back(h.edges()[i]);
        auto sub = Hypergraph::from_edge_sets(h.n(), h.r(), std::move(cls));
        if (auto m = has_matching(sub, sizes[static_cast<std::size_t>(color - 1)]))
            return {true, color, *m};
    }
    return {false, 0, Matching{}};
}

}  // namespace orelab
