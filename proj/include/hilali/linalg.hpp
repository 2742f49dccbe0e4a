#ifndef HILALI_LINALG_HPP
#define HILALI_LINALG_HPP

#include <cstddef>
#include <vector>

#include "hilali/rational.hpp"

namespace hilali {

// Dense matrix over Q, row-major. Sized by monomial bases, so small; the
// point is exactness, not BLAS.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_column(const std::vector<Rational>& col);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination: rows are scaled to integers,
// then eliminated with exact divisions by the previous pivot. Keeps entry
// growth to minor-sized integers instead of compounding rational gcds.
std::size_t rank_bareiss(const QMatrix& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(QMatrix& m);

// Basis of the right kernel {v : Mv = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

}  // namespace hilali

#endif
