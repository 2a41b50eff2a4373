#include "sheetlab/orbit_closure.hpp"

#include "sheetlab/errors.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/minors.hpp"

#include <set>

namespace sheetlab {

namespace {

void require_traceless(const RationalMatrix& m, const char* what) {
    if (!m.trace().is_zero()) {
        throw TraceError(std::string(what) + " must be traceless, trace is " + m.trace().to_string());
    }
}

/// Remainder of m (a polynomial in t with coefficients in the y-ring) modulo
/// the monic divisor, returned coefficient by coefficient.
std::vector<MultiPoly> remainder_coefficients(const MultiPoly& m, std::size_t t_var, const UniPoly& divisor) {
    const std::size_t d = divisor.degree_nonzero();
    std::vector<MultiPoly> c = m.split_by(t_var);
    for (std::size_t k = c.size(); k-- > d;) {
        if (c[k].is_zero()) {
            continue;
        }
        const MultiPoly lead = c[k];
        for (std::size_t j = 0; j <= d; ++j) {
            const Rational& dj = divisor.coefficient(j);
            if (!dj.is_zero()) {
                c[k - d + j] -= lead * dj;
            }
        }
    }
    if (c.size() > d) {
        c.resize(d);
    }
    return c;
}

/// Scale-free key: the polynomial divided by its first coefficient.
MultiPoly normalized(const MultiPoly& p) {
    return p * p.terms().begin()->second.inverse();
}

}  // namespace

bool closure_contains(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.size() != y.size()) {
        throw ShapeError("closure_contains: sizes " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    require_traceless(x, "x");
    require_traceless(y, "y");
    const auto px = gcd_minor_profile(x);
    const auto py = gcd_minor_profile(y);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        if (!divides(px.Q(i), py.Q(i))) {
            return false;
        }
    }
    return true;
}

std::string variable_name(std::size_t n, std::size_t index) {
    if (index == t_variable(n)) {
        return "t";
    }
    const std::size_t i = index / n + 1;
    const std::size_t j = index % n + 1;
    if (n < 10) {
        return "y" + std::to_string(i) + std::to_string(j);
    }
    return "y" + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<MultiPoly> symbolic_char_matrix(std::size_t n) {
    if (n == 0) {
        throw InputError("symbolic_char_matrix requires n >= 1");
    }
    const std::size_t arity = symbolic_arity(n);
    const MultiPoly t = MultiPoly::variable(arity, t_variable(n));
    std::vector<MultiPoly> m(n * n, MultiPoly(arity));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) {
                continue;
            }
            m[i * n + j] = MultiPoly::variable(arity, entry_variable(n, i, j));
        }
    }
    MultiPoly last(arity);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        last -= m[k * n + k];
    }
    m[n * n - 1] = last;
    for (std::size_t k = 0; k < n; ++k) {
        m[k * n + k] -= t;
    }
    return m;
}

IdealGenerators weyman_generators(const QuotientPoint& z, std::size_t limit) {
    const std::size_t n = z.size();
    if (n > limit) {
        throw ResourceGuardError("symbolic generators are limited to n <= " + std::to_string(limit) + ", got n = " +
                                 std::to_string(n));
    }
    std::vector<UniPoly> divisors(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        divisors[i] = reconstruct_Q(z, i);
    }

    const auto table = MinorTable<MultiPoly>(symbolic_char_matrix(n), n, n);
    IdealGenerators out{z.sigma(), z, {}};
    std::set<MultiPoly, bool (*)(const MultiPoly&, const MultiPoly&)> seen(
        [](const MultiPoly& a, const MultiPoly& b) { return a.terms() < b.terms(); });
    for (std::size_t i = 1; i <= n; ++i) {
        if (divisors[i].is_one()) {
            continue;
        }
        for (const auto& minor : table.minors(n + 1 - i)) {
            for (auto& g : remainder_coefficients(minor, t_variable(n), divisors[i])) {
                if (g.is_zero()) {
                    continue;
                }
                if (seen.insert(normalized(g)).second) {
                    out.gens.push_back(std::move(g));
                }
            }
        }
    }
    return out;
}

std::vector<Rational> evaluate_generators(const IdealGenerators& gens, const RationalMatrix& y) {
    const std::size_t n = gens.z.size();
    if (y.size() != n) {
        throw ShapeError("evaluate_generators: generators are for n = " + std::to_string(n) + ", matrix has n = " +
                         std::to_string(y.size()));
    }
    require_traceless(y, "y");
    std::vector<Rational> values(symbolic_arity(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            values[entry_variable(n, i, j)] = y(i, j);
        }
    }
    std::vector<Rational> out;
    out.reserve(gens.gens.size());
    for (const auto& g : gens.gens) {
        out.push_back(g.evaluate(values));
    }
    return out;
}

bool all_vanish(const IdealGenerators& gens, const RationalMatrix& y) {
    for (const auto& v : evaluate_generators(gens, y)) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace sheetlab
