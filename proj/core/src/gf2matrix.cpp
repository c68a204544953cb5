#include "gf2trace/gf2matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf2trace {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
    auto& w = bits_[r * words_per_row_ + c / 64];
    if (v)
        w |= std::uint64_t{1} << (c % 64);
    else
        w &= ~(std::uint64_t{1} << (c % 64));
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix tmp = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !tmp.get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            std::swap(tmp.bits_[rank * words_per_row_ + w], tmp.bits_[pivot * words_per_row_ + w]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && tmp.get(r, c)) {
                for (std::size_t w = 0; w < words_per_row_; ++w)
                    tmp.bits_[r * words_per_row_ + w] ^= tmp.bits_[rank * words_per_row_ + w];
            }
        }
        ++rank;
    }
    return rank;
}

Gf2Matrix::Solution Gf2Matrix::solve(const std::vector<std::uint64_t>& rhs) const {
    Gf2Matrix a = *this;
    std::vector<std::uint64_t> b = rhs;
    b.resize((rows_ + 63) / 64, 0);

    std::vector<std::optional<std::size_t>> pivot_of_col(cols_);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !a.get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            std::swap(a.bits_[rank * words_per_row_ + w], a.bits_[pivot * words_per_row_ + w]);
        {
            bool t = vec_bit(b, rank);
            vec_set_bit(b, rank, vec_bit(b, pivot));
            vec_set_bit(b, pivot, t);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && a.get(r, c)) {
                for (std::size_t w = 0; w < words_per_row_; ++w)
                    a.bits_[r * words_per_row_ + w] ^= a.bits_[rank * words_per_row_ + w];
                vec_set_bit(b, r, vec_bit(b, r) ^ vec_bit(b, rank));
            }
        }
        pivot_of_col[c] = rank;
        ++rank;
    }

    Solution sol;
    // inconsistent iff a zero row has rhs 1
    for (std::size_t r = rank; r < rows_; ++r) {
        if (vec_bit(b, r)) return sol;
    }
    sol.solvable = true;
    sol.particular.assign(words_per_row_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c]) vec_set_bit(sol.particular, c, vec_bit(b, *pivot_of_col[c]));
    }
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_of_col[f]) continue;
        std::vector<std::uint64_t> v(words_per_row_, 0);
        vec_set_bit(v, f, true);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c]) vec_set_bit(v, c, a.get(*pivot_of_col[c], f));
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

BitRowBasis::BitRowBasis(std::size_t width) : width_(width), words_((width + 63) / 64) {}

std::optional<std::size_t> BitRowBasis::leading_bit(const std::vector<std::uint64_t>& v) const {
    for (std::size_t w = v.size(); w-- > 0;) {
        if (v[w] != 0) {
            std::uint64_t x = v[w];
            std::size_t bit = 63;
            while (!((x >> bit) & 1)) --bit;
            return w * 64 + bit;
        }
    }
    return std::nullopt;
}

bool BitRowBasis::insert(std::vector<std::uint64_t> row) {
    row.resize(words_, 0);
    // tag bit = index of this row among *accepted* rows; discarded if dependent
    std::vector<std::uint64_t> tag((width_ + 63) / 64, 0);
    vec_set_bit(tag, rows_.size(), true);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto lead = leading_bit(row);
        if (!lead) break;
        if (*lead == pivots_[i]) {
            vec_xor(row, rows_[i]);
            vec_xor(tag, tags_[i]);
        } else if (*lead > pivots_[i]) {
            rows_.insert(rows_.begin() + i, row);
            tags_.insert(tags_.begin() + i, tag);
            pivots_.insert(pivots_.begin() + i, *lead);
            return true;
        }
    }
    auto lead = leading_bit(row);
    if (!lead) return false;
    rows_.push_back(std::move(row));
    tags_.push_back(std::move(tag));
    pivots_.push_back(*lead);
    return true;
}

bool BitRowBasis::in_span(std::vector<std::uint64_t> row) const {
    return combination(std::move(row)).has_value();
}

std::optional<std::vector<std::uint64_t>> BitRowBasis::combination(
    std::vector<std::uint64_t> row) const {
    row.resize(words_, 0);
    std::vector<std::uint64_t> tag((width_ + 63) / 64, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto lead = leading_bit(row);
        if (!lead) break;
        if (*lead == pivots_[i]) {
            vec_xor(row, rows_[i]);
            vec_xor(tag, tags_[i]);
        } else if (*lead > pivots_[i]) {
            return std::nullopt;
        }
    }
    if (!vec_is_zero(row)) return std::nullopt;
    return tag;
}

}  // namespace gf2trace
