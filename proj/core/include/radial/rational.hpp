#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace radial {

/// Exact rational number with 64-bit numerator and positive 64-bit denominator.
///
/// Always kept in lowest terms. Intermediate products are formed in 128-bit
/// arithmetic; a result that does not fit back into 64 bits throws
/// std::overflow_error instead of wrapping. Angles on the cylinder are measured
/// in turns with this type, so crossing parities never touch floating point.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    /// Representative of this value modulo 1 in [0, 1).
    Rational frac() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Lossy; for rendering only.
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

private:
    __extension__ typedef __int128 wide_t;
    static Rational from_wide(wide_t num, wide_t den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace radial
