#ifndef GF2TRACE_GF2MATRIX_HPP
#define GF2TRACE_GF2MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gf2trace {

// packed bit vector helpers (little-endian bit order)
inline bool vec_bit(const std::vector<std::uint64_t>& v, std::size_t i) {
    return (v[i / 64] >> (i % 64)) & 1;
}
inline void vec_set_bit(std::vector<std::uint64_t>& v, std::size_t i, bool b) {
    if (b)
        v[i / 64] |= std::uint64_t{1} << (i % 64);
    else
        v[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}
inline void vec_xor(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}
inline bool vec_is_zero(const std::vector<std::uint64_t>& v) {
    for (auto w : v)
        if (w != 0) return false;
    return true;
}

/// Dense matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
  public:
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    std::size_t rank() const;

    struct Solution {
        bool solvable = false;
        std::vector<std::uint64_t> particular;                // cols bits
        std::vector<std::vector<std::uint64_t>> nullspace;    // basis, cols bits each
    };
    /// Solve A x = b; rhs holds one bit per row (packed).
    Solution solve(const std::vector<std::uint64_t>& rhs) const;

  private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;  // row-major
};

/// Incremental GF(2) row basis: tracks an independent set in echelon form
/// and, optionally, the combination of inserted rows producing each pivot row.
class BitRowBasis {
  public:
    explicit BitRowBasis(std::size_t width);

    /// Returns true iff the row was independent of the current basis.
    bool insert(std::vector<std::uint64_t> row);

    bool in_span(std::vector<std::uint64_t> row) const;

    /// Coefficients (over the rows accepted by insert, in insertion order)
    /// expressing `row`; nullopt if not in span.
    std::optional<std::vector<std::uint64_t>> combination(std::vector<std::uint64_t> row) const;

    std::size_t rank() const { return rows_.size(); }

  private:
    std::optional<std::size_t> leading_bit(const std::vector<std::uint64_t>& v) const;

    std::size_t width_, words_;
    std::vector<std::vector<std::uint64_t>> rows_;  // echelon rows
    std::vector<std::vector<std::uint64_t>> tags_;  // combination over accepted rows
    std::vector<std::size_t> pivots_;
};

}  // namespace gf2trace

#endif
