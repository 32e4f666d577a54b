// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wpeb {

/// Thrown whenever an exact integer computation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

__extension__ typedef __int128 i128;

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("integer overflow in exact arithmetic");
    }
    return static_cast<std::int64_t>(v);
}

// floor(a / b) and ceil(a / b) for b > 0.
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

}  // namespace detail

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Exact fraction over 64-bit integers, always in lowest terms with a positive
/// denominator. Intermediate products are formed in 128 bits; a result that does
/// not fit back into 64 bits throws OverflowError.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }

    [[nodiscard]] std::int64_t floor() const {
        return detail::narrow(detail::floor_div(num_, den_));
    }
    [[nodiscard]] std::int64_t ceil() const {
        return detail::narrow(detail::ceil_div(num_, den_));
    }

    /// floor(k * this), exact.
    [[nodiscard]] std::int64_t floor_times(std::int64_t k) const {
        return detail::narrow(detail::floor_div(static_cast<detail::i128>(k) * num_, den_));
    }

    [[nodiscard]] Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("reciprocal of zero");
        return {den_, num_};
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from128(static_cast<detail::i128>(a.num_) + b.num_, a.den_);
        return from128(static_cast<detail::i128>(a.num_) * b.den_ + static_cast<detail::i128>(b.num_) * a.den_,
                       static_cast<detail::i128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<detail::i128>(a.num_) * b.num_, static_cast<detail::i128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return from128(static_cast<detail::i128>(a.num_) * b.den_, static_cast<detail::i128>(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = detail::narrow(-static_cast<detail::i128>(num_));
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        auto lhs = static_cast<detail::i128>(a.num_) * b.den_;
        auto rhs = static_cast<detail::i128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "a/b", or just "a" for integers.
    [[nodiscard]] std::string to_string() const;

    /// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

private:
    static Rational from128(detail::i128 num, detail::i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        detail::i128 g = detail::gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = detail::narrow(num);
        r.den_ = detail::narrow(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("zero denominator");
        *this = from128(num, den);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// ceil(n / w) for integer n >= 0 and rational w > 0.
inline std::int64_t ceil_div(std::int64_t n, const Rational& w) {
    if (w.num() <= 0) throw std::domain_error("ceil_div by non-positive weight");
    return detail::narrow(detail::ceil_div(static_cast<detail::i128>(n) * w.den(), w.num()));
}

}  // namespace wpeb

template <>
struct std::hash<wpeb::Rational> {
    std::size_t operator()(const wpeb::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
