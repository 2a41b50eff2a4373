#pragma once

/**
 * @file minor_gcd.hpp
 * @brief Invariant factors of the characteristic matrix x - tI.
 *
 * Q_i is the monic gcd of the (n+1-i)-sized minors of x - tI, with
 * Q_{n+1} = 1, and q_i = Q_i / Q_{i+1}. The q_i are the invariant factors,
 * ordered so that q_{i+1} divides q_i.
 */

#include "sheetlab/matrix.hpp"
#include "sheetlab/uni_poly.hpp"

#include <cstddef>
#include <vector>

namespace sheetlab {

struct PolyMatrix {
    std::size_t n = 0;
    std::vector<UniPoly> entries;  // row-major

    const UniPoly& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Invariant-factor tower. Indices are 1-based as in Q_1..Q_{n+1}, q_1..q_n;
/// the accessors take those indices directly.
class InvariantFactorProfile {
public:
    /// Builds the tower from Q_1..Q_n (Q_{n+1} = 1 is appended) and checks every
    /// divisibility law; throws std::logic_error if one fails.
    explicit InvariantFactorProfile(std::vector<UniPoly> big_q);

    [[nodiscard]] std::size_t size() const { return n_; }
    /// Q_i for 1 <= i <= n+1.
    [[nodiscard]] const UniPoly& Q(std::size_t i) const;
    /// q_i for 1 <= i <= n+1 (q_{n+1} = 1).
    [[nodiscard]] const UniPoly& q(std::size_t i) const;

    [[nodiscard]] const std::vector<UniPoly>& Q_list() const { return big_q_; }
    [[nodiscard]] const std::vector<UniPoly>& q_list() const { return small_q_; }

    friend bool operator==(const InvariantFactorProfile&, const InvariantFactorProfile&) = default;

private:
    std::size_t n_ = 0;
    std::vector<UniPoly> big_q_;    // Q_1..Q_{n+1}
    std::vector<UniPoly> small_q_;  // q_1..q_n
};

/// Entry (i,j) = x_ij - t * delta_ij.
PolyMatrix char_matrix(const RationalMatrix& x);

/// All k x k minors, lexicographic in (row set, column set). Throws
/// std::out_of_range for k outside 1..n.
std::vector<UniPoly> all_minors(const PolyMatrix& m, std::size_t k);

/// Monic gcd of a list, skipping zeros and stopping early once it reaches 1.
/// Throws std::domain_error if every element is zero.
UniPoly gcd_fold(const std::vector<UniPoly>& polys);

InvariantFactorProfile gcd_minor_profile(const RationalMatrix& x);

/// Monic characteristic polynomial det(tI - x).
UniPoly characteristic_polynomial(const RationalMatrix& x);

/// dim ker p(x), by exact rank.
std::size_t kernel_dim(const RationalMatrix& x, const UniPoly& p);

}  // namespace sheetlab
