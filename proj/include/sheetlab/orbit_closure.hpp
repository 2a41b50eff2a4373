#pragma once

/**
 * @file orbit_closure.hpp
 * @brief Orbit-closure membership and the remainder generators of the
 *        universal family over a sheet quotient.
 *
 * y lies in the closure of the orbit of x iff Q_i^x divides Q_i^y for all i.
 * Symbolically, dividing each (n+1-i)-minor of y - tI by Q_i^z(t) in the
 * variable t leaves a remainder whose t-coefficients are polynomials in the
 * entries of y; those polynomials cut out the fiber over z.
 *
 * Variables are y_11, y_12, ..., y_nn, t in that order (index i*n + j for
 * y_{i+1,j+1}, index n*n for t). Tracelessness is encoded by substituting
 * y_nn = -(y_11 + ... + y_{n-1,n-1}); y_nn never occurs in a generator.
 */

#include "sheetlab/matrix.hpp"
#include "sheetlab/multi_poly.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sheets.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sheetlab {

/// Largest n accepted by the symbolic routines.
inline constexpr std::size_t kSymbolicSizeLimit = 4;

/// True iff Q_i^x divides Q_i^y for all i. Throws ShapeError on size mismatch
/// and TraceError if either matrix has nonzero trace.
bool closure_contains(const RationalMatrix& x, const RationalMatrix& y);

/// Number of variables for size n: n^2 entries plus t.
inline std::size_t symbolic_arity(std::size_t n) { return n * n + 1; }
inline std::size_t entry_variable(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }
inline std::size_t t_variable(std::size_t n) { return n * n; }

/// "y11", "y12", ..., "t" (1-based entry labels).
std::string variable_name(std::size_t n, std::size_t index);

/// Row-major y - tI over the trace-eliminated coordinate ring.
std::vector<MultiPoly> symbolic_char_matrix(std::size_t n);

struct IdealGenerators {
    Partition sigma;
    QuotientPoint z;
    std::vector<MultiPoly> gens;
};

/// Throws ResourceGuardError when z.size() exceeds limit.
IdealGenerators weyman_generators(const QuotientPoint& z, std::size_t limit = kSymbolicSizeLimit);

/// Value of each generator at the entries of y. Throws ShapeError for a size
/// mismatch and TraceError for nonzero trace.
std::vector<Rational> evaluate_generators(const IdealGenerators& gens, const RationalMatrix& y);

/// True iff every generator vanishes at y.
bool all_vanish(const IdealGenerators& gens, const RationalMatrix& y);

}  // namespace sheetlab
