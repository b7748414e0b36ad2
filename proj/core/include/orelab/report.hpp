#pragma once

#include <string>
#include <vector>

namespace orelab {

/// Line-oriented report with a stable key order. Text mode prints
/// "key: value" plus raw blocks; the machine-readable variant flattens
/// everything to one "key=value" datum per line.
class Report {
public:
    void add(const std::string& key, const std::string& value) {
        items_.push_back({key, value, false});
    }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    /// Multi-line payload (e.g. an hgf witness block).
    void add_block(const std::string& key, const std::string& block) {
        items_.push_back({key, block, true});
    }

    std::string render_text() const;
    std::string render_kv() const;

private:
    struct Item {
        std::string key;
        std::string value;
        bool block;
    };
    std::vector<Item> items_;
};

}  // namespace orelab
