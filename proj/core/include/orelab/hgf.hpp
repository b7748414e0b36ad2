#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orelab/hypergraph.hpp"

namespace orelab {

/// Parse error with the 1-based input line that caused it.
class HgfError : public std::runtime_error {
public:
    HgfError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Result of reading an hgf document. `colors` is present exactly when the
/// counts line carried a color count; colors are aligned with the canonical
/// edge order of `graph` and are NOT validated proper here (arrow colorings
/// are arbitrary partitions; rainbow contexts construct a ColoredHypergraph,
/// which enforces properness).
struct HgfDocument {
    Hypergraph graph;
    std::optional<std::vector<int>> colors;
    int color_count = 0;
};

/// Format:
///   hgf 1
///   n r m        (or: n r m c)
///   v1 ... vr    (strictly increasing 1-based ids; plus a color in [1,c])
/// Rejected with line numbers: wrong magic, bad counts, non-increasing
/// vertices, wrong edge size, vertex out of range, color out of range,
/// duplicate edges.
HgfDocument parse_hgf(std::istream& in);
HgfDocument parse_hgf_string(const std::string& text);

std::string serialize_hgf(const Hypergraph& h);
std::string serialize_hgf(const Hypergraph& h, const std::vector<int>& colors);

}  // namespace orelab
