#include "sheetlab/quotient.hpp"

#include "sheetlab/errors.hpp"

#include <stdexcept>

namespace sheetlab {

std::size_t quotient_degree(const Partition& sigma, std::size_t i) {
    return static_cast<std::size_t>(sigma.part(i) - sigma.part(i + 1));
}

std::size_t eliminated_index(const Partition& sigma) {
    const auto n = static_cast<std::size_t>(sigma.total());
    for (std::size_t k = n; k >= 1; --k) {
        if (quotient_degree(sigma, k) >= 1) {
            return k;
        }
    }
    return 0;
}

Rational trace_relation(const std::vector<UniPoly>& p) {
    Rational acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += Rational(static_cast<long>(i + 1)) * root_sum(p[i]);
    }
    return acc;
}

QuotientPoint::QuotientPoint(Partition sigma, std::vector<UniPoly> p) : sigma_(std::move(sigma)), p_(std::move(p)) {
    const auto n = static_cast<std::size_t>(sigma_.total());
    if (p_.size() != n) {
        throw InputError("quotient point for " + sigma_.to_string() + " needs " + std::to_string(n) +
                         " polynomials, got " + std::to_string(p_.size()));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        const UniPoly& pi = p_[i - 1];
        if (!pi.is_monic()) {
            throw InputError("p_" + std::to_string(i) + " = " + pi.to_string() + " is not monic");
        }
        if (pi.degree_nonzero() != quotient_degree(sigma_, i)) {
            throw InputError("p_" + std::to_string(i) + " must have degree " +
                             std::to_string(quotient_degree(sigma_, i)) + ", got " + pi.to_string());
        }
    }
    if (!trace_relation(p_).is_zero()) {
        throw TraceError("quotient point violates the trace relation: sum i*S(p_i) = " +
                         trace_relation(p_).to_string());
    }
}

QuotientPoint QuotientPoint::from_chart(const Partition& sigma, const std::vector<Rational>& chart) {
    const auto n = static_cast<std::size_t>(sigma.total());
    const std::size_t expected = static_cast<std::size_t>(sigma.part(1)) - 1;
    if (chart.size() != expected) {
        throw InputError("chart for " + sigma.to_string() + " has " + std::to_string(expected) +
                         " coordinates, got " + std::to_string(chart.size()));
    }
    const std::size_t k = eliminated_index(sigma);
    std::vector<std::vector<Rational>> coeffs(n);
    std::size_t pos = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t d = quotient_degree(sigma, i);
        coeffs[i - 1].resize(d + 1);
        coeffs[i - 1][d] = 1;
        for (std::size_t j = 0; j < d; ++j) {
            if (i == k && j + 1 == d) {
                continue;
            }
            coeffs[i - 1][j] = chart[pos++];
        }
    }
    // sum_i i * S(p_i) = 0 with S(p_i) = -(subleading coefficient)
    Rational rest;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t d = quotient_degree(sigma, i);
        if (i != k && d >= 1) {
            rest += Rational(static_cast<long>(i)) * coeffs[i - 1][d - 1];
        }
    }
    if (k != 0) {
        coeffs[k - 1][quotient_degree(sigma, k) - 1] = -rest / Rational(static_cast<long>(k));
    }
    std::vector<UniPoly> p;
    p.reserve(n);
    for (auto& c : coeffs) {
        p.emplace_back(std::move(c));
    }
    return QuotientPoint(sigma, std::move(p));
}

QuotientPoint QuotientPoint::nilpotent(const Partition& sigma) {
    const auto n = static_cast<std::size_t>(sigma.total());
    std::vector<UniPoly> p;
    for (std::size_t i = 1; i <= n; ++i) {
        p.push_back(UniPoly::monomial(1, quotient_degree(sigma, i)));
    }
    return QuotientPoint(sigma, std::move(p));
}

const UniPoly& QuotientPoint::p(std::size_t i) const {
    if (i < 1 || i > p_.size()) {
        throw std::out_of_range("p index out of range");
    }
    return p_[i - 1];
}

std::vector<Rational> QuotientPoint::chart() const {
    const std::size_t k = eliminated_index(sigma_);
    std::vector<Rational> out;
    for (std::size_t i = 1; i <= p_.size(); ++i) {
        const std::size_t d = quotient_degree(sigma_, i);
        for (std::size_t j = 0; j < d; ++j) {
            if (i == k && j + 1 == d) {
                continue;
            }
            out.push_back(p_[i - 1].coefficient(j));
        }
    }
    return out;
}

bool QuotientPoint::is_nilpotent() const {
    for (const auto& pi : p_) {
        for (std::size_t j = 0; j + 1 < pi.coefficients().size(); ++j) {
            if (!pi.coefficient(j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

QuotientPoint quotient_point(const RationalMatrix& x) {
    const SheetDescriptor sheet = classify_sheet(x);
    const auto profile = gcd_minor_profile(x);
    std::vector<UniPoly> p;
    p.reserve(x.size());
    for (std::size_t i = 1; i <= x.size(); ++i) {
        p.push_back(exact_quotient(profile.q(i), profile.q(i + 1)));
    }
    return QuotientPoint(sheet.sigma, std::move(p));
}

UniPoly reconstruct_Q(const QuotientPoint& z, std::size_t i) {
    const std::size_t n = z.size();
    if (i < 1 || i > n) {
        throw std::out_of_range("reconstruct_Q index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    UniPoly acc = UniPoly::constant(1);
    for (std::size_t j = i; j <= n; ++j) {
        acc *= poly_pow(z.p(j), static_cast<unsigned>(j - i + 1));
    }
    return acc;
}

RationalMatrix companion(const UniPoly& monic_poly) {
    if (!monic_poly.is_monic() || monic_poly.degree_nonzero() == 0) {
        throw std::invalid_argument("companion needs a monic polynomial of positive degree");
    }
    const std::size_t d = monic_poly.degree_nonzero();
    RationalMatrix c(d, Ambient::gl);
    for (std::size_t i = 1; i < d; ++i) {
        c(i, i - 1) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) {
        c(i, d - 1) = -monic_poly.coefficient(i);
    }
    return c;
}

RationalMatrix section(const QuotientPoint& z) {
    const std::size_t n = z.size();
    RationalMatrix out(n, Ambient::gl);
    std::size_t offset = 0;
    UniPoly q = UniPoly::constant(1);
    std::vector<UniPoly> qs(n);
    for (std::size_t i = n; i >= 1; --i) {
        q *= z.p(i);
        qs[i - 1] = q;
    }
    for (const auto& qi : qs) {
        const std::size_t d = qi.degree_nonzero();
        if (d == 0) {
            break;
        }
        const RationalMatrix block = companion(qi);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                out(offset + r, offset + c) = block(r, c);
            }
        }
        offset += d;
    }
    return out.with_ambient(Ambient::sl);
}

bool fiber_contains(const QuotientPoint& z, const InvariantFactorProfile& y_profile) {
    if (y_profile.size() != z.size()) {
        throw ShapeError("fiber_contains: size mismatch");
    }
    for (std::size_t i = 1; i <= z.size(); ++i) {
        if (!divides(reconstruct_Q(z, i), y_profile.Q(i))) {
            return false;
        }
    }
    return true;
}

bool fiber_contains(const QuotientPoint& z, const RationalMatrix& y) {
    if (y.size() != z.size()) {
        throw ShapeError("fiber_contains: point is for n = " + std::to_string(z.size()) + ", matrix has n = " +
                         std::to_string(y.size()));
    }
    if (!y.trace().is_zero()) {
        throw TraceError("fiber_contains requires a traceless matrix");
    }
    return fiber_contains(z, gcd_minor_profile(y));
}

QuotientPoint scale_quotient_point(const QuotientPoint& z, const Rational& eps) {
    if (eps.is_zero()) {
        throw std::domain_error("scale_quotient_point by zero");
    }
    std::vector<UniPoly> p;
    p.reserve(z.size());
    for (const auto& pi : z.polys()) {
        p.push_back(poly_rescale(pi, eps));
    }
    return QuotientPoint(z.sigma(), std::move(p));
}

}  // namespace sheetlab
