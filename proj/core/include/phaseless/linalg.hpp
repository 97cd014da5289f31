#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phaseless/rational.hpp"

namespace phaseless {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals. Desk scale only (tens of rows/columns).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    /// Throws std::invalid_argument on ragged input.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    RationalMatrix transposed() const;
    RationalMatrix select_columns(std::span<const std::size_t> columns) const;
    RationalMatrix select_rows(std::span<const std::size_t> rows) const;
    /// [top; bottom]. Column counts must agree.
    static RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom);

    RationalVector multiply(std::span<const Rational> v) const;
    bool is_zero() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on row-scaled integer copies.
std::size_t exact_rank(const RationalMatrix& m);

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan over Q; pivots are the first nonzero entries in column order.
RowEchelon reduced_row_echelon(const RationalMatrix& m);

/// Basis of {v : M v = 0}. Each vector's first nonzero entry is +1; the basis is
/// indexed by the free columns of the RREF in increasing order.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// Determinant of a square matrix (Bareiss). Throws std::invalid_argument otherwise.
Rational determinant(const RationalMatrix& m);

/// Canonical basis (RREF rows) of the span of the given vectors; two spans are
/// equal iff their canonical bases are equal.
RationalMatrix canonical_span(const std::vector<RationalVector>& vectors, std::size_t dimension);

}  // namespace phaseless
