#pragma once

/**
 * @file uni_poly.hpp
 * @brief Dense univariate polynomials in t over the rationals.
 *
 * Coefficients are stored from degree 0 upward with no trailing zeros, so the
 * zero polynomial is the empty coefficient list. Its degree is reported as an
 * empty optional: callers that need a numeric degree must handle the zero case
 * themselves.
 */

#include "sheetlab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sheetlab {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    /// c * t^degree
    static UniPoly monomial(const Rational& c, std::size_t degree);
    /// t - root
    static UniPoly linear_factor(const Rational& root);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Empty for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const;
    /// Degree of a polynomial known to be nonzero; throws std::domain_error otherwise.
    [[nodiscard]] std::size_t degree_nonzero() const;

    /// Coefficient of t^k (zero past the end).
    [[nodiscard]] Rational coefficient(std::size_t k) const;
    [[nodiscard]] const Rational& leading_coefficient() const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

    [[nodiscard]] Rational evaluate(const Rational& at) const;

    [[nodiscard]] std::string to_string(const std::string& var = "t") const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& rhs);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

struct DivRem {
    UniPoly quotient;
    UniPoly remainder;
};

UniPoly poly_add(const UniPoly& a, const UniPoly& b);
UniPoly poly_mul(const UniPoly& a, const UniPoly& b);
UniPoly poly_pow(const UniPoly& a, unsigned exponent);

/// Long division a = q*b + r with deg r < deg b. Throws std::domain_error if b is zero.
DivRem poly_div_rem(const UniPoly& a, const UniPoly& b);

/// True iff b divides a exactly. The zero polynomial divides only zero.
bool divides(const UniPoly& b, const UniPoly& a);

/// Exact quotient a / b; throws std::domain_error if the remainder is nonzero.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// a divided by its leading coefficient. Throws std::domain_error for zero.
UniPoly monic(const UniPoly& a);

/// Monic gcd; gcd(a, 0) = monic(a). Throws std::domain_error for gcd(0, 0).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Sum of the roots with multiplicity: minus the subleading coefficient.
/// Requires a monic argument (std::invalid_argument otherwise).
Rational root_sum(const UniPoly& p);

/// eps^deg(p) * p(t / eps) for monic p, i.e. the monic polynomial whose roots
/// are eps times the roots of p. Throws std::domain_error for eps = 0 and
/// std::invalid_argument for non-monic p.
UniPoly poly_rescale(const UniPoly& p, const Rational& eps);

}  // namespace sheetlab
