#include "sheetlab/matrix.hpp"

#include "sheetlab/errors.hpp"

#include <sstream>

namespace sheetlab {

std::string to_string(Ambient a) { return a == Ambient::sl ? "sl" : "gl"; }

Ambient parse_ambient(const std::string& text) {
    if (text == "sl") {
        return Ambient::sl;
    }
    if (text == "gl") {
        return Ambient::gl;
    }
    throw InputError("ambient must be \"sl\" or \"gl\", got \"" + text + "\"");
}

RationalMatrix::RationalMatrix(std::size_t n, Ambient ambient) : n_(n), ambient_(ambient), data_(n * n) {}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows, Ambient ambient)
    : n_(rows.size()), ambient_(ambient) {
    if (n_ == 0) {
        throw ShapeError("matrix must have at least one row");
    }
    data_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            throw ShapeError("matrix is not square: row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n_));
        }
        for (auto& v : rows[i]) {
            data_.push_back(std::move(v));
        }
    }
    if (ambient_ == Ambient::sl && !trace().is_zero()) {
        throw TraceError("matrix declared in sl(" + std::to_string(n_) + ") has trace " + trace().to_string());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n, Ambient ambient) {
    RationalMatrix m(n, Ambient::gl);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m.with_ambient(ambient);
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t i, std::size_t j, Ambient ambient) {
    RationalMatrix m(n, Ambient::gl);
    m(i, j) = 1;
    return m.with_ambient(ambient);
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d, Ambient ambient) {
    RationalMatrix m(d.size(), Ambient::gl);
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m.with_ambient(ambient);
}

Rational RationalMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

RationalMatrix RationalMatrix::with_ambient(Ambient ambient) const {
    if (ambient == Ambient::sl && !trace().is_zero()) {
        throw TraceError("matrix has trace " + trace().to_string() + ", not in sl(" + std::to_string(n_) + ")");
    }
    RationalMatrix m = *this;
    m.ambient_ = ambient;
    return m;
}

RationalMatrix RationalMatrix::from_flat(std::size_t n, std::span<const Rational> entries, Ambient ambient) {
    if (entries.size() != n * n) {
        throw ShapeError("flat entry count does not match n*n");
    }
    RationalMatrix m(n, Ambient::gl);
    m.data_.assign(entries.begin(), entries.end());
    return m.with_ambient(ambient);
}

std::vector<std::vector<Rational>> RationalMatrix::rows() const {
    std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
    if (rhs.n_ != n_) {
        throw ShapeError("matrix size mismatch in addition");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    if (ambient_ != rhs.ambient_) {
        ambient_ = trace().is_zero() ? ambient_ : Ambient::gl;
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
    if (rhs.n_ != n_) {
        throw ShapeError("matrix size mismatch in subtraction");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    if (ambient_ != rhs.ambient_) {
        ambient_ = trace().is_zero() ? ambient_ : Ambient::gl;
    }
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
    for (auto& v : data_) {
        v *= c;
    }
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_ != b.n_) {
        throw ShapeError("matrix size mismatch in product");
    }
    const std::size_t n = a.n_;
    RationalMatrix out(n, Ambient::gl);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < n_; ++j) {
            os << (j == 0 ? "" : ", ") << (*this)(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c = a * b - b * a;
    return c.with_ambient(Ambient::sl);
}

RationalMatrix evaluate_at(const UniPoly& p, const RationalMatrix& x) {
    const std::size_t n = x.size();
    RationalMatrix acc(n, Ambient::gl);
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x;
        for (std::size_t i = 0; i < n; ++i) {
            acc(i, i) += *it;
        }
    }
    return acc;
}

RationalMatrix conjugate_by(const RationalMatrix& g, const RationalMatrix& g_inv, const RationalMatrix& x) {
    RationalMatrix y = g * x * g_inv;
    return y.with_ambient(x.ambient());
}

namespace {

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) {
            ++sel;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[sel]);
        const Rational inv = rows[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) {
            rows[r][j] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) {
                continue;
            }
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!rows[r][j].is_zero()) {
                    rows[i][j] -= f * rows[r][j];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    RowSpace space(cols);
    for (auto& row : rows) {
        space.insert(std::move(row));
    }
    return space.rank();
}

std::size_t rank(const RationalMatrix& m) { return rank(m.rows()); }

std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -rows[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::size_t> RowSpace::reduce(std::vector<Rational>& v) const {
    if (v.size() != dim_) {
        throw ShapeError("vector length does not match row space dimension");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p].is_zero()) {
            continue;
        }
        const Rational f = v[p];
        const auto& row = rows_[k];
        for (std::size_t j = p; j < dim_; ++j) {
            if (!row[j].is_zero()) {
                v[j] -= f * row[j];
            }
        }
    }
    for (std::size_t j = 0; j < dim_; ++j) {
        if (!v[j].is_zero()) {
            return j;
        }
    }
    return std::nullopt;
}

bool RowSpace::insert(std::vector<Rational> v) {
    const auto lead = reduce(v);
    if (!lead) {
        return false;
    }
    const std::size_t p = *lead;
    const Rational inv = v[p].inverse();
    for (std::size_t j = p; j < dim_; ++j) {
        v[j] *= inv;
    }
    for (auto& row : rows_) {
        if (row[p].is_zero()) {
            continue;
        }
        const Rational f = row[p];
        for (std::size_t j = p; j < dim_; ++j) {
            if (!v[j].is_zero()) {
                row[j] -= f * v[j];
            }
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpace::contains(std::vector<Rational> v) const { return !reduce(v).has_value(); }

}  // namespace sheetlab
