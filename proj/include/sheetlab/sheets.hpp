#pragma once

/**
 * @file sheets.hpp
 * @brief Partitions of n and the sheets of sl(n) they label.
 *
 * A matrix x lies in the sheet of sigma = (b_1 >= b_2 >= ...) exactly when
 * deg q_i^x = b_i for every i. Every sheet contains one nilpotent orbit, that
 * of the Jordan matrix with block sizes b_1, b_2, ...
 */

#include "sheetlab/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sheetlab {

class Partition {
public:
    Partition() = default;
    /// Parts must be positive and weakly decreasing; throws InputError otherwise.
    explicit Partition(std::vector<int> parts);

    /// Total n = b_1 + b_2 + ...
    [[nodiscard]] int total() const { return total_; }
    /// Number of nonzero parts.
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    /// b_i, 1-based; zero past the last part.
    [[nodiscard]] int part(std::size_t i) const;
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// c_j = #{ i : b_i >= j }
Partition conjugate(const Partition& sigma);

/// True iff every prefix sum of a is at least the corresponding prefix sum of b
/// (a and b must have the same total; throws InputError otherwise).
bool dominates(const Partition& a, const Partition& b);

/// All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int n);

struct SheetDescriptor {
    Partition sigma;
    Partition conjugate;
    int orbit_dim = 0;     // n^2 - sum c_j^2
    int quotient_dim = 0;  // b_1 - 1

    friend bool operator==(const SheetDescriptor&, const SheetDescriptor&) = default;
};

SheetDescriptor describe_sheet(const Partition& sigma);

/// Sheet of a traceless matrix from the degrees of its invariant factors.
/// Throws TraceError for nonzero trace.
SheetDescriptor classify_sheet(const RationalMatrix& x);

/// Block-diagonal nilpotent Jordan matrix, blocks of sizes b_1, b_2, ...,
/// ones on the superdiagonal inside each block.
RationalMatrix nilpotent_representative(const Partition& sigma);

std::vector<SheetDescriptor> enumerate_sheets(int n);

}  // namespace sheetlab
