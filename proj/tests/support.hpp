#pragma once

/**
 * @file support.hpp
 * @brief Shared builders and brute-force oracles for the unit tests.
 */

#include "sheetlab/matrix.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/uni_poly.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace sheetlab::testing {

inline Rational R(long p, long q = 1) { return {p, q}; }

/// Coefficients from degree 0 upward.
inline UniPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return UniPoly(std::move(v));
}

inline const UniPoly& t() {
    static const UniPoly var = P({0, 1});
    return var;
}

inline UniPoly t_pow(std::size_t k) { return UniPoly::monomial(1, k); }

inline RationalMatrix M(std::initializer_list<std::initializer_list<long>> rows, Ambient a = Ambient::sl) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long x : r) {
            row.emplace_back(x);
        }
        out.push_back(std::move(row));
    }
    return {std::move(out), a};
}

/// Regular nilpotent n x n (ones on the superdiagonal).
inline RationalMatrix J(std::size_t n) {
    RationalMatrix x(n, Ambient::sl);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        x(i, i + 1) = 1;
    }
    return x;
}

inline RationalMatrix E(std::size_t n, std::size_t i, std::size_t j) {
    return RationalMatrix::unit(n, i, j).with_ambient(i == j ? Ambient::gl : Ambient::sl);
}

/// Leibniz determinant over any commutative ring: independent of the
/// Laplace memoization used by the library.
template <class Ring>
Ring leibniz_det(const std::vector<std::vector<Ring>>& a) {
    const std::size_t k = a.size();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Ring total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Ring term = a[0][perm[0]];
        for (std::size_t i = 1; i < k; ++i) {
            term = term * a[i][perm[i]];
        }
        total = inversions % 2 == 0 ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// All k x k minors of x - tI in lexicographic (rows, cols) order, by Leibniz.
inline std::vector<UniPoly> brute_force_minors(const RationalMatrix& x, std::size_t k) {
    const std::size_t n = x.size();
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (pick[i]) {
                s.push_back(i);
            }
        }
        subsets.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::vector<UniPoly> out;
    for (const auto& rows : subsets) {
        for (const auto& cols : subsets) {
            std::vector<std::vector<UniPoly>> sub(k, std::vector<UniPoly>(k));
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = 0; b < k; ++b) {
                    UniPoly e = UniPoly::constant(x(rows[a], cols[b]));
                    if (rows[a] == cols[b]) {
                        e -= t();
                    }
                    sub[a][b] = e;
                }
            }
            out.push_back(leibniz_det(sub));
        }
    }
    return out;
}

/// Monic det(x - tI) by Leibniz.
inline UniPoly brute_force_charpoly(const RationalMatrix& x) {
    return monic(brute_force_minors(x, x.size()).front());
}

}  // namespace sheetlab::testing
