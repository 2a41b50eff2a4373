#pragma once

/**
 * @file matrix.hpp
 * @brief Dense square matrices over the rationals and the exact linear algebra
 *        built on them (rank, null space, incremental row spaces).
 */

#include "sheetlab/rational.hpp"
#include "sheetlab/uni_poly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sheetlab {

enum class Ambient { sl, gl };

std::string to_string(Ambient a);
/// Accepts "sl" or "gl"; throws InputError otherwise.
Ambient parse_ambient(const std::string& text);

class RationalMatrix {
public:
    RationalMatrix() = default;
    /// Zero matrix of size n.
    explicit RationalMatrix(std::size_t n, Ambient ambient = Ambient::sl);
    /// Throws ShapeError when rows are not n x n, TraceError when ambient is sl
    /// and the trace is nonzero.
    RationalMatrix(std::vector<std::vector<Rational>> rows, Ambient ambient);

    static RationalMatrix identity(std::size_t n, Ambient ambient = Ambient::gl);
    /// E_{ij} with 0-based indices.
    static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j, Ambient ambient = Ambient::gl);
    static RationalMatrix diagonal(const std::vector<Rational>& d, Ambient ambient = Ambient::gl);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] Ambient ambient() const { return ambient_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    [[nodiscard]] Rational trace() const;
    [[nodiscard]] bool is_zero() const;

    /// Relabels the ambient algebra; throws TraceError when moving to sl with nonzero trace.
    [[nodiscard]] RationalMatrix with_ambient(Ambient ambient) const;

    /// Row-major entries, the coordinate vector in gl(n).
    [[nodiscard]] const std::vector<Rational>& flat() const { return data_; }
    static RationalMatrix from_flat(std::size_t n, std::span<const Rational> entries, Ambient ambient = Ambient::gl);

    [[nodiscard]] std::vector<std::vector<Rational>> rows() const;

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    RationalMatrix& operator-=(const RationalMatrix& rhs);
    RationalMatrix& operator*=(const Rational& c);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }

    /// Entry-wise equality; the ambient tag is not compared.
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t n_ = 0;
    Ambient ambient_ = Ambient::gl;
    std::vector<Rational> data_;
};

/// [a, b] = ab - ba
RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b);

/// p(x) by Horner's rule; p = 0 gives the zero matrix.
RationalMatrix evaluate_at(const UniPoly& p, const RationalMatrix& x);

/// g x g^{-1} given both g and its inverse.
RationalMatrix conjugate_by(const RationalMatrix& g, const RationalMatrix& g_inv, const RationalMatrix& x);

/// Exact rank of a rows x cols system (row-major rows of equal length).
std::size_t rank(std::vector<std::vector<Rational>> rows);
std::size_t rank(const RationalMatrix& m);

/// Basis of {v : A v = 0} for the given coefficient rows, each of length cols.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> rows, std::size_t cols);

/**
 * Incrementally built row space in reduced echelon form.
 *
 * insert() reduces the vector against the stored pivots and keeps it only if
 * it is independent. contains() tests membership without modifying the space.
 */
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    bool insert(std::vector<Rational> v);
    [[nodiscard]] bool contains(std::vector<Rational> v) const;
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    /// Returns the index of the first nonzero entry after reduction, if any.
    std::optional<std::size_t> reduce(std::vector<Rational>& v) const;

    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace sheetlab
