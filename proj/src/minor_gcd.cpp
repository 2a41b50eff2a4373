#include "sheetlab/minor_gcd.hpp"

#include "sheetlab/minors.hpp"

#include <stdexcept>

namespace sheetlab {

InvariantFactorProfile::InvariantFactorProfile(std::vector<UniPoly> big_q) : n_(big_q.size()) {
    big_q_ = std::move(big_q);
    big_q_.push_back(UniPoly::constant(1));
    small_q_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (!big_q_[i].is_monic()) {
            throw std::logic_error("Q_" + std::to_string(i + 1) + " is not monic");
        }
        auto [quot, rem] = poly_div_rem(big_q_[i], big_q_[i + 1]);
        if (!rem.is_zero()) {
            throw std::logic_error("Q_" + std::to_string(i + 2) + " does not divide Q_" + std::to_string(i + 1));
        }
        small_q_.push_back(std::move(quot));
    }
    for (std::size_t i = 0; i + 1 < n_; ++i) {
        if (!divides(small_q_[i + 1], small_q_[i])) {
            throw std::logic_error("q_" + std::to_string(i + 2) + " does not divide q_" + std::to_string(i + 1));
        }
    }
}

const UniPoly& InvariantFactorProfile::Q(std::size_t i) const {
    if (i < 1 || i > n_ + 1) {
        throw std::out_of_range("Q index out of range");
    }
    return big_q_[i - 1];
}

const UniPoly& InvariantFactorProfile::q(std::size_t i) const {
    if (i < 1 || i > n_ + 1) {
        throw std::out_of_range("q index out of range");
    }
    return i == n_ + 1 ? big_q_.back() : small_q_[i - 1];
}

PolyMatrix char_matrix(const RationalMatrix& x) {
    const std::size_t n = x.size();
    PolyMatrix m{n, std::vector<UniPoly>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.entries[i * n + j] = i == j ? UniPoly{x(i, j), Rational(-1)} : UniPoly::constant(x(i, j));
        }
    }
    return m;
}

std::vector<UniPoly> all_minors(const PolyMatrix& m, std::size_t k) {
    if (k < 1 || k > m.n) {
        throw std::out_of_range("minor size " + std::to_string(k) + " outside 1.." + std::to_string(m.n));
    }
    return MinorTable<UniPoly>(m.entries, m.n, k).minors(k);
}

UniPoly gcd_fold(const std::vector<UniPoly>& polys) {
    UniPoly acc;
    for (const auto& p : polys) {
        if (p.is_zero()) {
            continue;
        }
        acc = acc.is_zero() ? monic(p) : poly_gcd(acc, p);
        if (acc.is_one()) {
            break;
        }
    }
    if (acc.is_zero()) {
        throw std::domain_error("gcd of an all-zero list");
    }
    return acc;
}

InvariantFactorProfile gcd_minor_profile(const RationalMatrix& x) {
    const std::size_t n = x.size();
    const PolyMatrix m = char_matrix(x);
    const MinorTable<UniPoly> table(m.entries, n, n);
    std::vector<UniPoly> big_q(n);
    for (std::size_t i = 1; i <= n; ++i) {
        big_q[i - 1] = gcd_fold(table.minors(n + 1 - i));
    }
    return InvariantFactorProfile(std::move(big_q));
}

UniPoly characteristic_polynomial(const RationalMatrix& x) {
    // Faddeev-LeVerrier: M_k = x M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(x M_k) / k.
    const std::size_t n = x.size();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m(n, Ambient::gl);
    for (std::size_t k = 1; k <= n; ++k) {
        m = x * m;
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) += c[n - k + 1];
        }
        c[n - k] = -(x * m).trace() / Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

std::size_t kernel_dim(const RationalMatrix& x, const UniPoly& p) {
    return x.size() - rank(evaluate_at(p, x));
}

}  // namespace sheetlab
