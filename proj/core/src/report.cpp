#include "orelab/report.hpp"

#include <sstream>

namespace orelab {

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

std::string Report::render_text() const {
    std::ostringstream out;
    for (const auto& it : items_) {
        if (!it.block) {
            out << it.key << ": " << it.value << '\n';
        } else {
            out << it.key << ":\n";
            for (const auto& line : split_lines(it.value)) out << "  " << line << '\n';
        }
    }
    return out.str();
}

std::string Report::render_kv() const {
    std::ostringstream out;
    for (const auto& it : items_) {
        if (!it.block) {
            out << it.key << '=' << it.value << '\n';
        } else {
            auto lines = split_lines(it.value);
            for (std::size_t i = 0; i < lines.size(); ++i)
                out << it.key << '.' << i + 1 << '=' << lines[i] << '\n';
        }
    }
    return out.str();
}

}  // namespace orelab
