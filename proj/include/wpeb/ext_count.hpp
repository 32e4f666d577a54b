// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpeb {

/// A non-negative integer or infinity. Used for requirements (a zero-weight edge
/// can never be crossed) and for pebbling numbers of graphs that are not
/// p-solvable for any p.
class ExtCount {
public:
    constexpr ExtCount() = default;
    constexpr explicit ExtCount(std::int64_t value) : value_(value) {
        if (value < 0) throw std::invalid_argument("ExtCount must be non-negative");
    }
    static constexpr ExtCount infinite() {
        ExtCount c;
        c.infinite_ = true;
        return c;
    }

    [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
    [[nodiscard]] constexpr bool is_finite() const { return !infinite_; }
    [[nodiscard]] std::int64_t value() const {
        if (infinite_) throw std::logic_error("value() of an infinite count");
        return value_;
    }

    friend constexpr bool operator==(const ExtCount& a, const ExtCount& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const ExtCount& a, const ExtCount& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const ExtCount& a, std::int64_t b) { return !a.infinite_ && a.value_ == b; }
    friend constexpr std::strong_ordering operator<=>(const ExtCount& a, std::int64_t b) {
        if (a.infinite_) return std::strong_ordering::greater;
        return a.value_ <=> b;
    }

    [[nodiscard]] std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

}  // namespace wpeb
