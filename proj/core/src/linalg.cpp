#include "phaseless/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace phaseless {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix out(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        std::copy(rows[r].begin(), rows[r].end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1;
    }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> columns) const {
    RationalMatrix out(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < columns.size(); ++k) {
            out(r, k) = (*this)(r, columns[k]);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
    RationalMatrix out(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(k, c) = (*this)(rows[k], c);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& top, const RationalMatrix& bottom) {
    if (top.cols_ != bottom.cols_) {
        throw std::invalid_argument("stack: column counts differ");
    }
    RationalMatrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

RationalVector RationalMatrix::multiply(std::span<const Rational> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational sum(0);
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != 0 && v[c] != 0) {
                sum += (*this)(r, c) * v[c];
            }
        }
        out[r] = std::move(sum);
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

/// Each row multiplied by the lcm of its denominators; rank and the
/// vanishing of the determinant are unchanged.
IntegerRows integer_rows(const RationalMatrix& m) {
    IntegerRows out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(r, c)));
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = boost::multiprecision::numerator(m(r, c)) *
                        (scale / boost::multiprecision::denominator(m(r, c)));
        }
    }
    return out;
}

/// Bareiss elimination in place. Returns the rank; `swaps` counts row exchanges.
std::size_t bareiss(IntegerRows& a, std::size_t cols, std::size_t& swaps) {
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    Integer previous = 1;
    swaps = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            ++swaps;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / previous;
            }
            a[r][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t exact_rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    IntegerRows a = integer_rows(m);
    std::size_t swaps = 0;
    return bareiss(a, m.cols(), swaps);
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return Rational(1);
    }
    // det(M) = det(integer copy) / prod(row scales).
    Rational scale_product(1);
    for (std::size_t r = 0; r < n; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < n; ++c) {
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(r, c)));
        }
        scale_product *= Rational(scale);
    }
    IntegerRows a = integer_rows(m);
    std::size_t swaps = 0;
    if (bareiss(a, n, swaps) < n) {
        return Rational(0);
    }
    // With full rank the pivots sit on the diagonal; the last one is the determinant.
    Rational det(a[n - 1][n - 1]);
    if (swaps % 2 == 1) {
        det = -det;
    }
    return det / scale_product;
}

RowEchelon reduced_row_echelon(const RationalMatrix& m) {
    RowEchelon out{m, {}};
    RationalMatrix& a = out.reduced;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == a.rows()) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a(pivot, c), a(rank, c));
            }
        }
        const Rational inv = 1 / a(rank, col);
        for (std::size_t c = col; c < a.cols(); ++c) {
            a(rank, c) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || a(r, col) == 0) {
                continue;
            }
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (a(rank, c) != 0) {
                    a(r, c) -= factor * a(rank, c);
                }
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    return out;
}

std::vector<RationalVector> null_space(const RationalMatrix& m) {
    const RowEchelon echelon = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : echelon.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
            v[echelon.pivots[r]] = -echelon.reduced(r, free);
        }
        auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (*first != 1) {
            const Rational inv = 1 / *first;
            for (Rational& x : v) {
                x *= inv;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix canonical_span(const std::vector<RationalVector>& vectors, std::size_t dimension) {
    RationalMatrix stacked(vectors.size(), dimension);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != dimension) {
            throw std::invalid_argument("canonical_span: dimension mismatch");
        }
        for (std::size_t c = 0; c < dimension; ++c) {
            stacked(r, c) = vectors[r][c];
        }
    }
    RowEchelon echelon = reduced_row_echelon(stacked);
    std::vector<std::size_t> keep(echelon.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        keep[i] = i;
    }
    return echelon.reduced.select_rows(keep);
}

}  // namespace phaseless
