#include "hilali/linalg.hpp"

#include <stdexcept>

namespace hilali {

void QMatrix::append_column(const std::vector<Rational>& col) {
    if (rows_ == 0 && cols_ == 0) rows_ = col.size();
    if (col.size() != rows_) throw std::invalid_argument("append_column: row count mismatch");
    std::vector<Rational> next((cols_ + 1) * rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) next[r * (cols_ + 1) + c] = data_[r * cols_ + c];
        next[r * (cols_ + 1) + cols_] = col[r];
    }
    data_ = std::move(next);
    ++cols_;
}

std::size_t rank_bareiss(const QMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
    for (std::size_t r = 0; r < nr; ++r) {
        BigInt l(1);
        for (std::size_t c = 0; c < nc; ++c) {
            const BigInt& d = m.at(r, c).den();
            BigInt g = BigInt::gcd(l, d);
            l = l.divide_exact(g) * d;
        }
        for (std::size_t c = 0; c < nc; ++c) {
            const Rational& q = m.at(r, c);
            a[r][c] = q.num() * l.divide_exact(q.den());
        }
    }

    std::size_t rank = 0;
    BigInt prev_pivot(1);
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = nr;
        for (std::size_t r = rank; r < nr; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == nr) continue;
        std::swap(a[rank], a[pivot]);
        const BigInt p = a[rank][col];
        for (std::size_t r = rank + 1; r < nr; ++r) {
            const BigInt f = a[r][col];
            for (std::size_t c = col; c < nc; ++c) {
                a[r][c] = (a[r][c] * p - f * a[rank][c]).divide_exact(prev_pivot);
            }
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pr = nr;
        for (std::size_t r = row; r < nr; ++r)
            if (!m.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr == nr) continue;
        if (pr != row)
            for (std::size_t c = 0; c < nc; ++c) std::swap(m.at(row, c), m.at(pr, c));
        Rational inv = m.at(row, col).inverse();
        for (std::size_t c = col; c < nc; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < nc; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    QMatrix w = m;
    std::vector<std::size_t> pivots = rref(w);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_c = 0; free_c < nc; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(nc);
        v[free_c] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -w.at(i, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hilali
