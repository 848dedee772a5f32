#include "virg/linalg.hpp"

namespace virg {

namespace {

template <class T, class ExactDiv>
T bareiss(Matrix<T> m, ExactDiv exact_div) {
    const std::size_t n = m.rows();
    if (m.cols() != n) {
        throw DomainError("determinant of a non-square matrix");
    }
    if (n == 0) {
        return T(1);
    }
    T previous(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (field_is_zero(m(k, k))) {
            std::size_t swap_with = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (!field_is_zero(m(r, k))) {
                    swap_with = r;
                    break;
                }
            }
            if (swap_with == k) {
                return T(0);
            }
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(value, previous);
            }
            m(i, k) = T(0);
        }
        previous = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return sign < 0 ? T(-det) : det;
}

} // namespace

Poly bareiss_determinant(Matrix<Poly> m) {
    return bareiss(std::move(m), [](const Poly& a, const Poly& b) { return a.exact_div(b); });
}

Rational bareiss_determinant(Matrix<Rational> m) {
    return bareiss(std::move(m), [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

std::vector<Poly> FractionFreeRowReducer::reduce(std::vector<Poly> row) const {
    Poly previous(1L);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const std::size_t p = pivots_[k];
        const auto& b = basis_[k];
        const Poly& lead = b[p];
        const Poly factor = row[p];
        for (std::size_t c = 0; c < width_; ++c) {
            Poly v = lead * row[c];
            if (!factor.is_zero() && !b[c].is_zero()) {
                v -= factor * b[c];
            }
            row[c] = v.exact_div(previous);
        }
        previous = lead;
    }
    return row;
}

bool FractionFreeRowReducer::insert(std::vector<Poly> row) {
    if (row.size() != width_) {
        throw DomainError("row width mismatch in elimination");
    }
    row = reduce(std::move(row));
    for (std::size_t c = 0; c < width_; ++c) {
        if (!row[c].is_zero()) {
            basis_.push_back(std::move(row));
            pivots_.push_back(c);
            return true;
        }
    }
    return false;
}

} // namespace virg
