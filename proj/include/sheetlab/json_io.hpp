#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of every exchanged value.
 *
 *   Rational          "p/q" or "p" (integers are also accepted on input)
 *   UniPoly           coefficient array, degree 0 first
 *   RationalMatrix    {"n": int, "ambient": "sl"|"gl", "entries": [[...], ...]}
 *   Profile           {"Q": [poly, ...], "q": [poly, ...]}
 *   Partition         [b_1, b_2, ...]
 *   SheetDescriptor   {"sigma", "conjugate", "orbit_dim", "quotient_dim"}
 *   QuotientPoint     {"sigma": [...], "p": [poly, ...]}; input may give
 *                     "chart" instead of "p"
 *   Generators        [{"monomial": {"y11": 2, ...}, "coefficient": "c"}, ...]
 *   Subspace          [matrix, ...]
 *   DimensionReport   {"centralizer_dim", "derived_dim", "codim", "abelian"}
 *
 * Decoders throw ParseError for schema violations, ShapeError for non-square
 * matrices and TraceError for an sl matrix with nonzero trace.
 */

#include "sheetlab/centralizer.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/multi_poly.hpp"
#include "sheetlab/orbit_closure.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sheets.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sheetlab::io {

using nlohmann::json;

json encode(const Rational& r);
json encode(const UniPoly& p);
json encode(const RationalMatrix& m);
json encode(const InvariantFactorProfile& profile);
json encode(const Partition& p);
json encode(const SheetDescriptor& d);
json encode(const QuotientPoint& z);
/// Terms of one generator; variable names follow orbit_closure's labels.
json encode(const MultiPoly& poly, std::size_t n);
json encode(const IdealGenerators& gens);
json encode(const MatrixSubspace& s);
json encode(const DimensionReport& r);

Rational decode_rational(const json& j);
UniPoly decode_poly(const json& j);
/// default_ambient applies when the document has no "ambient" field.
RationalMatrix decode_matrix(const json& j, Ambient default_ambient = Ambient::sl);
Partition decode_partition(const json& j);
QuotientPoint decode_quotient_point(const json& j);

/// Parses text, rethrowing JSON syntax errors as ParseError.
json parse_document(const std::string& text);

/// Human-readable form of a generator.
std::string display(const MultiPoly& poly, std::size_t n);

}  // namespace sheetlab::io
