#pragma once

// Exact dense linear algebra over the coefficient fields used by the module
// builders (Rational, Scalar) plus fraction-free determinants over Poly.

#include "virg/error.hpp"
#include "virg/poly.hpp"
#include "virg/rational.hpp"
#include "virg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace virg {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline bool field_is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool field_is_zero(const Scalar& v) { return v.is_zero(); }
inline bool field_is_zero(const Poly& v) { return v.is_zero(); }

// Incrementally maintains an echelon basis of a row space. insert() reports
// whether a row is independent of the rows accepted so far, which lets callers
// pick a maximal independent subset in their own order.
template <class T>
class RowReducer {
public:
    explicit RowReducer(std::size_t width) : width_(width) {}

    std::size_t rank() const { return basis_.size(); }
    std::size_t width() const { return width_; }

    // Reduces row against the basis. Returns the residual (all zeros if dependent).
    std::vector<T> reduce(std::vector<T> row) const {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (field_is_zero(row[p])) {
                continue;
            }
            const T factor = row[p];
            const auto& b = basis_[k];
            for (std::size_t c = p; c < width_; ++c) {
                if (!field_is_zero(b[c])) {
                    row[c] -= factor * b[c];
                }
            }
        }
        return row;
    }

    bool insert(std::vector<T> row) {
        if (row.size() != width_) {
            throw DomainError("row width mismatch in elimination");
        }
        row = reduce(std::move(row));
        std::optional<std::size_t> pivot;
        for (std::size_t c = 0; c < width_; ++c) {
            if (!field_is_zero(row[c])) {
                pivot = c;
                break;
            }
        }
        if (!pivot) {
            return false;
        }
        const T inv = T(1) / row[*pivot];
        for (std::size_t c = *pivot; c < width_; ++c) {
            if (!field_is_zero(row[c])) {
                row[c] *= inv;
            }
        }
        basis_.push_back(std::move(row));
        pivots_.push_back(*pivot);
        return true;
    }

    const std::vector<std::vector<T>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<std::vector<T>> basis_;
    std::vector<std::size_t> pivots_;
};

// Fraction-free counterpart of RowReducer over an integral domain of
// polynomials. Each accepted row is stored at its Bareiss stage, so every
// division while reducing a new row is exact.
class FractionFreeRowReducer {
public:
    explicit FractionFreeRowReducer(std::size_t width) : width_(width) {}

    std::size_t rank() const { return basis_.size(); }
    std::size_t width() const { return width_; }

    std::vector<Poly> reduce(std::vector<Poly> row) const;
    bool insert(std::vector<Poly> row);

private:
    std::size_t width_;
    std::vector<std::vector<Poly>> basis_;
    std::vector<std::size_t> pivots_;
};

template <class T>
struct ReducerFor {
    using type = RowReducer<T>;
};
template <>
struct ReducerFor<Poly> {
    using type = FractionFreeRowReducer;
};

template <class T>
struct EchelonForm {
    Matrix<T> reduced;                  // reduced row echelon form, zero rows last
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination to reduced row echelon form.
template <class T>
EchelonForm<T> reduced_row_echelon(Matrix<T> m) {
    EchelonForm<T> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::optional<std::size_t> pivot_row;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (!field_is_zero(m(r, col))) {
                pivot_row = r;
                break;
            }
        }
        if (!pivot_row) {
            continue;
        }
        m.swap_rows(row, *pivot_row);
        const T inv = T(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || field_is_zero(m(r, col))) {
                continue;
            }
            const T factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!field_is_zero(m(row, c))) {
                    m(r, c) -= factor * m(row, c);
                }
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank_of(const Matrix<T>& m) {
    RowReducer<T> reducer(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        reducer.insert(m.row(r));
    }
    return reducer.rank();
}

// Basis of the right null space {v : m v = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    const EchelonForm<T> ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<T>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<T> v(m.cols(), T{});
        v[free] = T(1);
        for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
            v[ech.pivots[k]] = -ech.reduced(k, free);
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Fraction-free (Bareiss) determinant of a square polynomial matrix; every
// division is exact.
Poly bareiss_determinant(Matrix<Poly> m);

// Determinant over Q by Bareiss elimination.
Rational bareiss_determinant(Matrix<Rational> m);

} // namespace virg
