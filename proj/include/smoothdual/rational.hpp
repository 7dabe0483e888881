#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smoothdual {

/// Raised when an exact integer computation leaves the representable range.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/*
 * Exact rational number num/den over 64-bit integers.
 *
 * Always normalized: den > 0 and gcd(|num|, den) == 1, so structural
 * equality is numeric equality. Intermediate products are formed in 128
 * bits; a result that does not fit back into 64 bits throws
 * ArithmeticOverflow instead of wrapping.
 */
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integer is intended
    Rational(std::int64_t n, std::int64_t d);

    /// Parses "p", "-p", "p/r" (decimal integers, r != 0).
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    /// Largest integer <= value.
    std::int64_t floor() const;
    /// Value minus floor, in [0, 1).
    Rational frac() const;

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    long double to_long_double() const
    {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    /// "p" when integral, otherwise "p/r".
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace smoothdual

template <> struct std::hash<smoothdual::Rational> {
    std::size_t operator()(const smoothdual::Rational &r) const noexcept
    {
        return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
    }
};
