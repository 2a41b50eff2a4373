#include "sheetlab/centralizer.hpp"

#include "sheetlab/errors.hpp"

namespace sheetlab {

namespace {

/// Standard basis of sl(n): E_ij (i != j) then E_ii - E_nn.
std::vector<RationalMatrix> sl_basis(std::size_t n) {
    std::vector<RationalMatrix> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                out.push_back(RationalMatrix::unit(n, i, j, Ambient::sl));
            }
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalMatrix h(n, Ambient::gl);
        h(i, i) = 1;
        h(n - 1, n - 1) = -1;
        out.push_back(h.with_ambient(Ambient::sl));
    }
    return out;
}

std::vector<std::size_t> block_offsets(const Partition& sigma) {
    std::vector<std::size_t> offsets{0};
    for (int b : sigma.parts()) {
        offsets.push_back(offsets.back() + static_cast<std::size_t>(b));
    }
    return offsets;
}

}  // namespace

MatrixSubspace MatrixSubspace::span(std::size_t n, Ambient ambient, const std::vector<RationalMatrix>& generators) {
    MatrixSubspace s(n, ambient);
    for (const auto& g : generators) {
        s.add(g);
    }
    return s;
}

MatrixSubspace MatrixSubspace::whole(std::size_t n, Ambient ambient) {
    if (ambient == Ambient::sl) {
        return span(n, ambient, sl_basis(n));
    }
    std::vector<RationalMatrix> units;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            units.push_back(RationalMatrix::unit(n, i, j));
        }
    }
    return span(n, ambient, units);
}

bool MatrixSubspace::add(const RationalMatrix& m) {
    if (m.size() != n_) {
        throw ShapeError("subspace element has the wrong size");
    }
    if (ambient_ == Ambient::sl && !m.trace().is_zero()) {
        throw TraceError("element of an sl subspace must be traceless");
    }
    if (!space_.insert(m.flat())) {
        return false;
    }
    basis_.push_back(m.with_ambient(ambient_));
    return true;
}

bool MatrixSubspace::contains(const RationalMatrix& m) const {
    if (m.size() != n_) {
        throw ShapeError("subspace membership: wrong size");
    }
    return space_.contains(m.flat());
}

bool MatrixSubspace::contains(const MatrixSubspace& other) const {
    for (const auto& b : other.basis()) {
        if (!contains(b)) {
            return false;
        }
    }
    return true;
}

bool same_subspace(const MatrixSubspace& a, const MatrixSubspace& b) {
    return a.dimension() == b.dimension() && a.contains(b);
}

MatrixSubspace centralizer(const RationalMatrix& x, Ambient ambient) {
    const std::size_t n = x.size();
    const std::size_t vars = n * n;
    // (xy - yx)_{ij} = sum_k x_ik y_kj - y_ik x_kj, unknown y_kl at index k*n + l.
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vars + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> row(vars);
            for (std::size_t k = 0; k < n; ++k) {
                row[k * n + j] += x(i, k);
                row[i * n + k] -= x(k, j);
            }
            rows.push_back(std::move(row));
        }
    }
    if (ambient == Ambient::sl) {
        std::vector<Rational> tr(vars);
        for (std::size_t k = 0; k < n; ++k) {
            tr[k * n + k] = 1;
        }
        rows.push_back(std::move(tr));
    }
    MatrixSubspace s(n, ambient);
    for (const auto& v : null_space(std::move(rows), vars)) {
        s.add(RationalMatrix::from_flat(n, v, ambient));
    }
    return s;
}

MatrixSubspace derived_subalgebra(const MatrixSubspace& s) {
    const std::size_t n = s.size();
    MatrixSubspace derived(n, Ambient::sl);
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            derived.add(bracket(b[i], b[j]));
        }
    }
    // Brackets of S land in S, so [D, D] is already inside D; iterate anyway
    // until the span stops growing.
    std::size_t done = 0;
    while (done < derived.dimension()) {
        const std::size_t before = derived.dimension();
        const auto snapshot = derived.basis();
        for (std::size_t i = done; i < snapshot.size(); ++i) {
            for (std::size_t j = 0; j < snapshot.size(); ++j) {
                if (i != j) {
                    derived.add(bracket(snapshot[i], snapshot[j]));
                }
            }
        }
        done = before;
    }
    MatrixSubspace out(n, s.ambient());
    for (const auto& m : derived.basis()) {
        out.add(m);
    }
    return out;
}

bool is_abelian(const MatrixSubspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!bracket(b[i], b[j]).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::size_t coadjoint_invariant_dim(const RationalMatrix& x, Ambient ambient) {
    const auto s = centralizer(x, ambient);
    return s.dimension() - derived_subalgebra(s).dimension();
}

DimensionReport centralizer_report(const RationalMatrix& x, Ambient ambient) {
    const auto s = centralizer(x, ambient);
    const auto d = derived_subalgebra(s);
    return {s.dimension(), d.dimension(), s.dimension() - d.dimension(), d.dimension() == 0};
}

Rational killing_form(const RationalMatrix& y, const RationalMatrix& z) {
    return Rational(static_cast<long>(2 * y.size())) * (y * z).trace();
}

MatrixSubspace tangent_space(const RationalMatrix& x) {
    const std::size_t n = x.size();
    MatrixSubspace s(n, Ambient::sl);
    for (const auto& z : sl_basis(n)) {
        s.add(bracket(z, x));
    }
    return s;
}

MatrixSubspace killing_complement(const MatrixSubspace& s) {
    const std::size_t n = s.size();
    const std::size_t vars = n * n;
    // kappa(y, w) = 2n sum_{k,l} y_kl w_lk for each basis element w, plus trace y = 0.
    std::vector<std::vector<Rational>> rows;
    for (const auto& w : s.basis()) {
        std::vector<Rational> row(vars);
        const Rational scale(static_cast<long>(2 * n));
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
                row[k * n + l] = scale * w(l, k);
            }
        }
        rows.push_back(std::move(row));
    }
    std::vector<Rational> tr(vars);
    for (std::size_t k = 0; k < n; ++k) {
        tr[k * n + k] = 1;
    }
    rows.push_back(std::move(tr));
    MatrixSubspace out(n, Ambient::sl);
    for (const auto& v : null_space(std::move(rows), vars)) {
        out.add(RationalMatrix::from_flat(n, v, Ambient::sl));
    }
    return out;
}

KillingReport killing_report(const RationalMatrix& x) {
    if (!x.trace().is_zero()) {
        throw TraceError("Killing orthogonality is defined for traceless x");
    }
    const auto tangent = tangent_space(x);
    const auto cent = centralizer(x, Ambient::sl);
    const auto complement = killing_complement(tangent);
    return {tangent.dimension(), cent.dimension(), same_subspace(complement, cent)};
}

bool killing_orthogonality_check(const RationalMatrix& x) {
    const auto r = killing_report(x);
    const std::size_t n = x.size();
    return r.complement_equals_centralizer && r.tangent_dim + r.centralizer_dim == n * n - 1;
}

RationalMatrix block_projection(const Partition& sigma, std::size_t block) {
    const auto offsets = block_offsets(sigma);
    if (block + 1 >= offsets.size()) {
        throw std::out_of_range("block index out of range");
    }
    RationalMatrix p(static_cast<std::size_t>(sigma.total()), Ambient::gl);
    for (std::size_t k = offsets[block]; k < offsets[block + 1]; ++k) {
        p(k, k) = 1;
    }
    return p;
}

std::vector<RationalMatrix> lemma_basis(const Partition& sigma) {
    const RationalMatrix x = nilpotent_representative(sigma).with_ambient(Ambient::gl);
    std::vector<RationalMatrix> out;
    for (std::size_t i = 1; i <= sigma.length(); ++i) {
        const int count = sigma.part(i) - sigma.part(i + 1);
        const RationalMatrix id = block_projection(sigma, i - 1);
        RationalMatrix power = RationalMatrix::identity(x.size());
        for (int k = 0; k < count; ++k) {
            out.push_back(power * id);
            power = power * x;
        }
    }
    return out;
}

bool lemma_basis_check(const Partition& sigma) {
    const RationalMatrix x = nilpotent_representative(sigma).with_ambient(Ambient::gl);
    const auto cent = centralizer(x, Ambient::gl);
    const auto derived = derived_subalgebra(cent);
    const auto elements = lemma_basis(sigma);
    if (elements.size() != static_cast<std::size_t>(sigma.part(1))) {
        return false;
    }
    MatrixSubspace combined(x.size(), Ambient::gl);
    for (const auto& d : derived.basis()) {
        combined.add(d);
    }
    for (const auto& e : elements) {
        if (!cent.contains(e) || !combined.add(e)) {
            return false;
        }
    }
    return combined.dimension() == cent.dimension();
}

bool offdiagonal_absorbed(const Partition& sigma) {
    const RationalMatrix x = nilpotent_representative(sigma).with_ambient(Ambient::gl);
    const auto cent = centralizer(x, Ambient::gl);
    const auto derived = derived_subalgebra(cent);
    const auto offsets = block_offsets(sigma);
    const std::size_t blocks = sigma.length();
    for (const auto& c : cent.basis()) {
        for (std::size_t bi = 0; bi < blocks; ++bi) {
            for (std::size_t bj = 0; bj < blocks; ++bj) {
                if (bi == bj) {
                    continue;
                }
                // Component mapping E_bj -> E_bi: rows in block bi, columns in block bj.
                RationalMatrix part(x.size(), Ambient::gl);
                for (std::size_t r = offsets[bi]; r < offsets[bi + 1]; ++r) {
                    for (std::size_t s = offsets[bj]; s < offsets[bj + 1]; ++s) {
                        part(r, s) = c(r, s);
                    }
                }
                if (!cent.contains(part) || !derived.contains(part)) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace sheetlab
