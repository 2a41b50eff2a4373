#pragma once

/**
 * @file multi_poly.hpp
 * @brief Sparse multivariate polynomials with rational coefficients.
 *
 * Terms are kept in a std::map keyed by exponent vectors, so iteration order
 * (and therefore printing and serialization) is deterministic. No zero
 * coefficient is ever stored. A default-constructed MultiPoly is the zero
 * polynomial in an unspecified number of variables and combines with any
 * other polynomial.
 */

#include "sheetlab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sheetlab {

using Exponents = std::vector<std::uint16_t>;

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly term(Exponents exponents, const Rational& c);

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Highest exponent of the given variable (0 for the zero polynomial).
    [[nodiscard]] std::size_t degree_in(std::size_t var) const;
    [[nodiscard]] std::size_t total_degree() const;

    /// Coefficients of var^0, var^1, ... as polynomials in which var is absent.
    [[nodiscard]] std::vector<MultiPoly> split_by(std::size_t var) const;

    /// values.size() must equal nvars().
    [[nodiscard]] Rational evaluate(const std::vector<Rational>& values) const;

    using Namer = std::function<std::string(std::size_t)>;
    [[nodiscard]] std::string to_string(const Namer& name) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

private:
    void adopt_arity(const MultiPoly& other);
    void add_term(const Exponents& e, const Rational& c);

    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace sheetlab
