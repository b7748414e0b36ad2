#include "orelab/exact_int.hpp"

#include <algorithm>
#include <ostream>

namespace orelab {

std::string ExactInt::str() const {
    if (v_ == 0) return "0";
    std::string out;
    uint128 v = v_;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string(ExactInt v) { return v.str(); }

std::ostream& operator<<(std::ostream& os, ExactInt v) { return os << v.str(); }

}  // namespace orelab
