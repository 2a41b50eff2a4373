#pragma once

/**
 * @file centralizer.hpp
 * @brief Centralizers, derived subalgebras and Killing-form orthogonality in
 *        gl(n) and sl(n), by exact linear algebra on n^2-dimensional
 *        coordinate vectors.
 */

#include "sheetlab/matrix.hpp"
#include "sheetlab/sheets.hpp"

#include <cstddef>
#include <vector>

namespace sheetlab {

class MatrixSubspace {
public:
    MatrixSubspace(std::size_t n, Ambient ambient) : n_(n), ambient_(ambient), space_(n * n) {}

    /// Keeps an independent subset of the given matrices (first-come order).
    /// Throws TraceError if ambient is sl and some matrix has nonzero trace.
    static MatrixSubspace span(std::size_t n, Ambient ambient, const std::vector<RationalMatrix>& generators);
    /// All of gl(n) or sl(n).
    static MatrixSubspace whole(std::size_t n, Ambient ambient);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] Ambient ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
    [[nodiscard]] const std::vector<RationalMatrix>& basis() const { return basis_; }

    [[nodiscard]] bool contains(const RationalMatrix& m) const;
    [[nodiscard]] bool contains(const MatrixSubspace& other) const;

    /// Adds m if it is independent of the current basis; returns whether it was added.
    bool add(const RationalMatrix& m);

private:
    std::size_t n_;
    Ambient ambient_;
    std::vector<RationalMatrix> basis_;
    RowSpace space_;
};

/// Exact subspace equality (same span).
bool same_subspace(const MatrixSubspace& a, const MatrixSubspace& b);

/// { y in ambient : [x, y] = 0 }
MatrixSubspace centralizer(const RationalMatrix& x, Ambient ambient);

/// Span of brackets, closed under further bracketing (fixed-point iteration).
MatrixSubspace derived_subalgebra(const MatrixSubspace& s);

bool is_abelian(const MatrixSubspace& s);

/// dim S - dim [S, S] for S the centralizer of x: the dimension of the
/// S-invariant linear forms on S.
std::size_t coadjoint_invariant_dim(const RationalMatrix& x, Ambient ambient);

struct DimensionReport {
    std::size_t centralizer_dim = 0;
    std::size_t derived_dim = 0;
    std::size_t codim = 0;
    bool abelian = false;
};

DimensionReport centralizer_report(const RationalMatrix& x, Ambient ambient);

/// 2n * trace(yz), the Killing form of sl(n).
Rational killing_form(const RationalMatrix& y, const RationalMatrix& z);

/// Tangent space to the orbit: { [z, x] : z in sl(n) }.
MatrixSubspace tangent_space(const RationalMatrix& x);

/// Killing-orthogonal complement of s inside sl(n).
MatrixSubspace killing_complement(const MatrixSubspace& s);

struct KillingReport {
    std::size_t tangent_dim = 0;
    std::size_t centralizer_dim = 0;
    bool complement_equals_centralizer = false;
};

KillingReport killing_report(const RationalMatrix& x);

/// True iff the Killing complement of the tangent space equals the sl-centralizer.
bool killing_orthogonality_check(const RationalMatrix& x);

/// Projection onto block E_i (0-based), blocks laid out as in nilpotent_representative.
RationalMatrix block_projection(const Partition& sigma, std::size_t block);

/// The matrices x^k id_{E_i}, 0 <= k < b_i - b_{i+1}, for x = N_sigma.
std::vector<RationalMatrix> lemma_basis(const Partition& sigma);

/// True iff lemma_basis(sigma) lies in the gl-centralizer of N_sigma and maps to
/// a basis of centralizer / derived subalgebra (so it has b_1 elements).
bool lemma_basis_check(const Partition& sigma);

/// True iff every Hom(E_i, E_j) component (i != j) of the gl-centralizer of
/// N_sigma lies in its derived subalgebra.
bool offdiagonal_absorbed(const Partition& sigma);

}  // namespace sheetlab
