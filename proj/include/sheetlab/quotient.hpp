#pragma once

/**
 * @file quotient.hpp
 * @brief Coordinates on the orbit space of a sheet.
 *
 * A point of the quotient of the sheet of sigma is a tuple (p_1, ..., p_n) of
 * monic polynomials, deg p_i = b_i - b_{i+1}, subject to the linear relation
 * sum_i i * S(p_i) = 0 (S = sum of roots), which is tracelessness. For a
 * matrix x the tuple is p_i = q_i^x / q_{i+1}^x.
 *
 * The chart used for flat serialization lists the non-leading coefficients of
 * p_1, p_2, ... (each lowest degree first) and drops the subleading
 * coefficient of the last p_k of positive degree, which the trace relation
 * determines. The chart has b_1 - 1 entries.
 */

#include "sheetlab/matrix.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/sheets.hpp"
#include "sheetlab/uni_poly.hpp"

#include <cstddef>
#include <vector>

namespace sheetlab {

class QuotientPoint {
public:
    /// Validates degrees, monicity and the trace relation; throws InputError.
    QuotientPoint(Partition sigma, std::vector<UniPoly> p);

    /// Rebuilds the point from its b_1 - 1 chart coordinates.
    static QuotientPoint from_chart(const Partition& sigma, const std::vector<Rational>& chart);
    /// The point whose p_i are all powers of t.
    static QuotientPoint nilpotent(const Partition& sigma);

    [[nodiscard]] const Partition& sigma() const { return sigma_; }
    [[nodiscard]] std::size_t size() const { return p_.size(); }
    /// p_i, 1-based.
    [[nodiscard]] const UniPoly& p(std::size_t i) const;
    [[nodiscard]] const std::vector<UniPoly>& polys() const { return p_; }

    [[nodiscard]] std::vector<Rational> chart() const;
    [[nodiscard]] bool is_nilpotent() const;

    friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;

private:
    Partition sigma_;
    std::vector<UniPoly> p_;
};

/// Degree b_i - b_{i+1} required of p_i (1-based i).
std::size_t quotient_degree(const Partition& sigma, std::size_t i);

/// Index k (1-based) whose subleading coefficient the chart eliminates, or 0
/// when every p_i is constant (cannot happen for n >= 1).
std::size_t eliminated_index(const Partition& sigma);

/// sum_i i * S(p_i)
Rational trace_relation(const std::vector<UniPoly>& p);

QuotientPoint quotient_point(const RationalMatrix& x);

/// prod_{j=i}^{n} p_j^{j-i+1}; throws std::out_of_range unless 1 <= i <= n.
UniPoly reconstruct_Q(const QuotientPoint& z, std::size_t i);

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column minus the low coefficients.
RationalMatrix companion(const UniPoly& monic_poly);

/// Block diagonal of the companion matrices of q_1, ..., q_n (nonconstant ones),
/// where q_i = p_i p_{i+1} ... p_n.
RationalMatrix section(const QuotientPoint& z);

/// True iff Q_i^z divides Q_i^y for every i.
bool fiber_contains(const QuotientPoint& z, const RationalMatrix& y);
bool fiber_contains(const QuotientPoint& z, const InvariantFactorProfile& y_profile);

/// Replaces each p_i by poly_rescale(p_i, eps). Throws std::domain_error for eps = 0.
QuotientPoint scale_quotient_point(const QuotientPoint& z, const Rational& eps);

}  // namespace sheetlab
