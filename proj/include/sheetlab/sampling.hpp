#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic random sampling of sheet points, conjugators and
 *        orbit-closure boundary representatives.
 *
 * All randomness flows through Rng, whose integer draws are defined by plain
 * modular reduction of mt19937_64 output so that a seed reproduces the same
 * stream on every platform.
 */

#include "sheetlab/matrix.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sheets.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace sheetlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi);
    /// Integer in [lo, hi] \ {0}.
    long nonzero(long lo, long hi);
    /// numerator in [-bound, bound], denominator in {1, 2, 3}.
    Rational small_rational(long bound = 3);
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Stable 64-bit mix of a seed and a label, for per-case streams.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

struct Conjugator {
    RationalMatrix g;
    RationalMatrix g_inv;
};

/// Product of 2n elementary unipotent matrices I + a E_ij, a in [-3, 3] \ {0}.
Conjugator random_conjugator(std::size_t n, Rng& rng);

RationalMatrix random_conjugate(const RationalMatrix& x, Rng& rng);

/// Random chart coordinates mapped to a point of the sheet quotient.
QuotientPoint random_quotient_point(const Partition& sigma, Rng& rng);

/// Conjugate of section(random_quotient_point(sigma)).
RationalMatrix random_sheet_sample(const Partition& sigma, Rng& rng);

/// Jordan type at one eigenvalue: block sizes, weakly decreasing.
struct EigenBlock {
    Rational eigenvalue;
    Partition blocks;
};

/// A quotient point whose p_i split over Q, together with its Jordan data.
struct SplitPoint {
    QuotientPoint z;
    std::vector<EigenBlock> jordan;
};

/// Roots drawn from small integers; the trace relation fixes one root.
SplitPoint random_split_point(const Partition& sigma, Rng& rng);

/// Block diagonal of lambda*I + N_blocks for each entry.
RationalMatrix jordan_matrix(const std::vector<EigenBlock>& jordan);

/// Jordan types obtained by replacing each eigenvalue's partition with one it
/// dominates (or, with dominated = false, one it does not dominate, at one
/// eigenvalue at a time). The original type is included when dominated = true.
std::vector<std::vector<EigenBlock>> jordan_degenerations(const std::vector<EigenBlock>& jordan, bool dominated);

}  // namespace sheetlab
