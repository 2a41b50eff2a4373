#pragma once

/**
 * @file minors.hpp
 * @brief All minors of all sizes of a square matrix over a commutative ring.
 *
 * Minors of size k+1 are obtained from those of size k by Laplace expansion
 * along the first row of the row set, so each k-minor is computed once and
 * shared by every larger minor that contains it. Row and column sets are
 * bitmasks; results are returned in lexicographic (row-set, column-set) order
 * of the sorted index tuples.
 *
 * The ring type needs a zero default constructor, +, -, * and is_zero().
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace sheetlab {

/// Bitmasks of all k-element subsets of {0..n-1}, lexicographic in their sorted index tuples.
inline std::vector<std::uint32_t> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        std::uint32_t mask = 0;
        for (auto i : idx) {
            mask |= (1U << i);
        }
        out.push_back(mask);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) {
            idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

template <class Ring>
class MinorTable {
public:
    /// entries: row-major n x n. Computes every minor of size 1..max_k.
    MinorTable(const std::vector<Ring>& entries, std::size_t n, std::size_t max_k) : n_(n) {
        if (n == 0 || n > 16 || entries.size() != n * n) {
            throw std::invalid_argument("MinorTable: bad matrix shape");
        }
        if (max_k > n) {
            throw std::invalid_argument("MinorTable: minor size exceeds matrix size");
        }
        levels_.resize(max_k + 1);
        subsets_.resize(max_k + 1);
        for (std::size_t k = 1; k <= max_k; ++k) {
            subsets_[k] = k_subsets(n, k);
        }
        if (max_k >= 1) {
            auto& level = levels_[1];
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    level.emplace(key(1U << i, 1U << j), entries[i * n + j]);
                }
            }
        }
        for (std::size_t k = 2; k <= max_k; ++k) {
            const auto& prev = levels_[k - 1];
            auto& level = levels_[k];
            level.reserve(subsets_[k].size() * subsets_[k].size());
            for (auto rows : subsets_[k]) {
                const auto first_row = static_cast<std::size_t>(std::countr_zero(rows));
                const std::uint32_t rest = rows & ~(1U << first_row);
                for (auto cols : subsets_[k]) {
                    Ring acc{};
                    std::size_t position = 0;
                    for (std::uint32_t c = cols; c != 0; c &= c - 1, ++position) {
                        const auto col = static_cast<std::size_t>(std::countr_zero(c));
                        const Ring& entry = entries[first_row * n + col];
                        if (entry.is_zero()) {
                            continue;
                        }
                        const Ring& sub = prev.at(key(rest, cols & ~(1U << col)));
                        if (sub.is_zero()) {
                            continue;
                        }
                        if (position % 2 == 0) {
                            acc = acc + entry * sub;
                        } else {
                            acc = acc - entry * sub;
                        }
                    }
                    level.emplace(key(rows, cols), std::move(acc));
                }
            }
        }
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t max_size() const { return levels_.size() - 1; }

    /// All k-minors in lexicographic (row-set, column-set) order.
    [[nodiscard]] std::vector<Ring> minors(std::size_t k) const {
        if (k == 0 || k >= levels_.size()) {
            throw std::out_of_range("minor size out of range");
        }
        std::vector<Ring> out;
        out.reserve(subsets_[k].size() * subsets_[k].size());
        for (auto rows : subsets_[k]) {
            for (auto cols : subsets_[k]) {
                out.push_back(levels_[k].at(key(rows, cols)));
            }
        }
        return out;
    }

    /// The minor with the given row and column bitmasks (equal popcount).
    [[nodiscard]] const Ring& minor(std::uint32_t rows, std::uint32_t cols) const {
        const auto k = static_cast<std::size_t>(std::popcount(rows));
        return levels_.at(k).at(key(rows, cols));
    }

private:
    static std::uint64_t key(std::uint32_t rows, std::uint32_t cols) {
        return (static_cast<std::uint64_t>(rows) << 32U) | cols;
    }

    std::size_t n_;
    std::vector<std::unordered_map<std::uint64_t, Ring>> levels_;
    std::vector<std::vector<std::uint32_t>> subsets_;
};

}  // namespace sheetlab
