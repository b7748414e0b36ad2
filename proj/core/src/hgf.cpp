#include "orelab/hgf.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace orelab {

namespace {

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (!ss.eof()) {
        ss.clear();
        ss >> rest;
        if (!rest.empty()) throw HgfError(lineno, "unexpected token '" + rest + "'");
    }
    return out;
}

}  // namespace

HgfDocument parse_hgf(std::istream& in) {
    int lineno = 0;
    std::string line;

    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    if (!next_line()) throw HgfError(1, "empty input, expected magic 'hgf 1'");
    if (line != "hgf 1") throw HgfError(lineno, "bad magic, expected 'hgf 1'");

    if (!next_line()) throw HgfError(lineno + 1, "missing counts line");
    auto counts = parse_ints(line, lineno);
    if (counts.size() != 3 && counts.size() != 4)
        throw HgfError(lineno, "counts line must be 'n r m' or 'n r m c'");
    const long long n = counts[0], r = counts[1], m = counts[2];
    const bool colored = counts.size() == 4;
    const long long c = colored ? counts[3] : 0;
    if (n < 0 || n > VertexSet::max_vertices)
        throw HgfError(lineno, "n outside 0.." + std::to_string(VertexSet::max_vertices));
    if (r < 0 || r > n) throw HgfError(lineno, "need 0 <= r <= n");
    if (m < 0) throw HgfError(lineno, "negative edge count");
    if (colored && c < 0) throw HgfError(lineno, "negative color count");

    struct Row {
        VertexSet edge;
        int color;
        int lineno;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(m));

    for (long long k = 0; k < m; ++k) {
        if (!next_line()) throw HgfError(lineno + 1, "missing edge line");
        auto vals = parse_ints(line, lineno);
        const std::size_t expect = static_cast<std::size_t>(r) + (colored ? 1 : 0);
        if (vals.size() != expect)
            throw HgfError(lineno, "expected " + std::to_string(r) + " vertices" +
                                       (colored ? " and a color" : "") + ", got " +
                                       std::to_string(vals.size()) + " values");
        VertexSet e;
        long long prev = 0;
        for (long long i = 0; i < r; ++i) {
            long long v = vals[static_cast<std::size_t>(i)];
            if (v < 1 || v > n)
                throw HgfError(lineno, "vertex " + std::to_string(v) + " outside 1.." +
                                           std::to_string(n));
            if (v <= prev) throw HgfError(lineno, "vertex ids must be strictly increasing");
            prev = v;
            e.insert(static_cast<int>(v));
        }
        int color = 0;
        if (colored) {
            long long cv = vals.back();
            if (cv < 1 || cv > c)
                throw HgfError(lineno, "color " + std::to_string(cv) + " outside 1.." +
                                           std::to_string(c));
            color = static_cast<int>(cv);
        }
        rows.push_back({e, color, lineno});
    }

    if (next_line()) {
        if (!parse_ints(line, lineno).empty()) throw HgfError(lineno, "trailing data");
    }

    // Canonicalize: sort rows by edge mask so colors stay aligned. The later
    // line is reported for duplicates.
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.lineno < b.lineno;
    });
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].edge == rows[i + 1].edge)
            throw HgfError(rows[i + 1].lineno, "duplicate edge");
    std::vector<VertexSet> edges;
    edges.reserve(rows.size());
    for (const Row& row : rows) edges.push_back(row.edge);
    HgfDocument doc{Hypergraph::from_edge_sets(static_cast<int>(n), static_cast<int>(r),
                                               std::move(edges)),
                    std::nullopt, 0};
    if (colored) {
        std::vector<int> colors;
        colors.reserve(rows.size());
        for (const Row& row : rows) colors.push_back(row.color);
        doc.colors = std::move(colors);
        doc.color_count = static_cast<int>(c);
    }
    return doc;
}

HgfDocument parse_hgf_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_hgf(ss);
}

namespace {

void write_body(std::ostringstream& out, const Hypergraph& h, const std::vector<int>* colors,
                int color_count) {
    out << "hgf 1\n";
    out << h.n() << ' ' << h.r() << ' ' << h.edge_count();
    if (colors) out << ' ' << color_count;
    out << '\n';
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        out << h.edges()[i].str();
        if (colors) {
            if (h.r() > 0) out << ' ';
            out << (*colors)[i];
        }
        out << '\n';
    }
}

}  // namespace

std::string serialize_hgf(const Hypergraph& h) {
    std::ostringstream out;
    write_body(out, h, nullptr, 0);
    return out.str();
}

std::string serialize_hgf(const Hypergraph& h, const std::vector<int>& colors) {
    if (colors.size() != h.edge_count())
        throw std::invalid_argument("serialize_hgf: color count mismatch");
    int c = 1;
    for (int v : colors) {
        if (v < 1) throw std::invalid_argument("serialize_hgf: colors must be positive");
        c = std::max(c, v);
    }
    std::ostringstream out;
    write_body(out, h, &colors, c);
    return out.str();
}

}  // namespace orelab
