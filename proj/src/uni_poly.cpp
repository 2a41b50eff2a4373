#include "sheetlab/uni_poly.hpp"

#include <stdexcept>

namespace sheetlab {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear_factor(const Rational& root) { return UniPoly{-root, Rational(1)}; }

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> UniPoly::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

std::size_t UniPoly::degree_nonzero() const {
    if (coeffs_.empty()) {
        throw std::domain_error("degree of the zero polynomial");
    }
    return coeffs_.size() - 1;
}

Rational UniPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

const Rational& UniPoly::leading_coefficient() const {
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (k == 0 || !mag.is_one()) {
            out += mag.to_string();
            if (k > 0) {
                out += "*";
            }
        }
        if (k >= 1) {
            out += var;
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

UniPoly poly_add(const UniPoly& a, const UniPoly& b) { return a + b; }

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

UniPoly poly_pow(const UniPoly& a, unsigned exponent) {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = a;
    while (exponent > 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

DivRem poly_div_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const std::size_t db = b.degree_nonzero();
    const Rational lead_inv = b.leading_coefficient().inverse();

    std::vector<Rational> rem = a.coefficients();
    if (rem.size() <= db) {
        return {UniPoly{}, a};
    }
    std::vector<Rational> quot(rem.size() - db);
    const auto& bc = b.coefficients();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) {
            continue;
        }
        const Rational factor = rem[k] * lead_inv;
        quot[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= factor * bc[j];
        }
    }
    rem.resize(db);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

bool divides(const UniPoly& b, const UniPoly& a) {
    if (b.is_zero()) {
        return a.is_zero();
    }
    return poly_div_rem(a, b).remainder.is_zero();
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = poly_div_rem(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("inexact polynomial division: " + a.to_string() + " / " + b.to_string());
    }
    return q;
}

UniPoly monic(const UniPoly& a) {
    if (a.is_zero()) {
        throw std::domain_error("monic of the zero polynomial");
    }
    if (a.is_monic()) {
        return a;
    }
    return a * a.leading_coefficient().inverse();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = poly_div_rem(x, y).remainder;
        x = std::move(y);
        // Keep remainders monic so coefficient size stays bounded.
        y = r.is_zero() ? std::move(r) : monic(r);
    }
    return monic(x);
}

Rational root_sum(const UniPoly& p) {
    if (!p.is_monic()) {
        throw std::invalid_argument("root_sum requires a monic polynomial, got " + p.to_string());
    }
    const std::size_t d = p.degree_nonzero();
    if (d == 0) {
        return Rational();
    }
    return -p.coefficient(d - 1);
}

UniPoly poly_rescale(const UniPoly& p, const Rational& eps) {
    if (eps.is_zero()) {
        throw std::domain_error("rescale by zero");
    }
    if (!p.is_monic()) {
        throw std::invalid_argument("poly_rescale requires a monic polynomial, got " + p.to_string());
    }
    const std::size_t m = p.degree_nonzero();
    std::vector<Rational> out(m + 1);
    Rational factor(1);
    // coefficient of t^d is multiplied by eps^(m - d)
    for (std::size_t k = 0; k <= m; ++k) {
        const std::size_t d = m - k;
        out[d] = p.coefficient(d) * factor;
        factor *= eps;
    }
    return UniPoly(std::move(out));
}

}  // namespace sheetlab
