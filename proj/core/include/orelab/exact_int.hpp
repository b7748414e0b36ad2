#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace orelab {

using uint128 = unsigned __int128;
using int128 = __int128;

/// Exact nonnegative integer of fixed 128-bit width. Every operation is
/// overflow-checked: arithmetic that would wrap (or go negative) throws
/// std::overflow_error instead of corrupting a count.
class ExactInt {
public:
    constexpr ExactInt() = default;
    constexpr ExactInt(std::uint64_t v) : v_(v) {}  // NOLINT: implicit on purpose

    static constexpr ExactInt from_raw(uint128 v) {
        ExactInt e;
        e.v_ = v;
        return e;
    }

    constexpr uint128 raw() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    ExactInt operator+(ExactInt o) const {
        uint128 s = v_ + o.v_;
        if (s < v_) throw std::overflow_error("ExactInt: addition overflow");
        return from_raw(s);
    }
    ExactInt operator-(ExactInt o) const {
        if (o.v_ > v_) throw std::overflow_error("ExactInt: subtraction below zero");
        return from_raw(v_ - o.v_);
    }
    ExactInt operator*(ExactInt o) const {
        if (v_ != 0 && o.v_ != 0) {
            uint128 p = v_ * o.v_;
            if (p / v_ != o.v_) throw std::overflow_error("ExactInt: multiplication overflow");
            return from_raw(p);
        }
        return from_raw(0);
    }

    /// Floor division; throws on zero divisor.
    ExactInt floor_div(ExactInt o) const {
        if (o.v_ == 0) throw std::overflow_error("ExactInt: division by zero");
        return from_raw(v_ / o.v_);
    }
    /// Division that must be exact; remainder is an error.
    ExactInt exact_div(ExactInt o) const {
        if (o.v_ == 0) throw std::overflow_error("ExactInt: division by zero");
        if (v_ % o.v_ != 0) throw std::overflow_error("ExactInt: inexact division");
        return from_raw(v_ / o.v_);
    }

    ExactInt& operator+=(ExactInt o) { return *this = *this + o; }
    ExactInt& operator-=(ExactInt o) { return *this = *this - o; }
    ExactInt& operator*=(ExactInt o) { return *this = *this * o; }

    friend constexpr bool operator==(ExactInt a, ExactInt b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExactInt a, ExactInt b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExactInt a, ExactInt b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(ExactInt a, ExactInt b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(ExactInt a, ExactInt b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(ExactInt a, ExactInt b) { return a.v_ >= b.v_; }

    /// Checked narrowing to 64 bits.
    std::uint64_t to_u64() const {
        if (v_ > static_cast<uint128>(~std::uint64_t{0}))
            throw std::overflow_error("ExactInt: value exceeds 64 bits");
        return static_cast<std::uint64_t>(v_);
    }

    std::string str() const;

private:
    uint128 v_ = 0;
};

std::string to_string(ExactInt v);
std::ostream& operator<<(std::ostream& os, ExactInt v);

}  // namespace orelab
