#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Thin value type over GMP's mpq_class. Always canonical: lowest terms,
 * positive denominator, zero stored as 0/1. Serializes as "p/q", or "p"
 * when the denominator is one.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sheetlab {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
    /// and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    [[nodiscard]] std::string numerator_string() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_string() const { return value_.get_den().get_str(); }

    [[nodiscard]] Rational abs() const;
    /// Multiplicative inverse; throws std::domain_error for zero.
    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational pow(unsigned exponent) const;

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

}  // namespace sheetlab

template <>
struct std::hash<sheetlab::Rational> {
    std::size_t operator()(const sheetlab::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
