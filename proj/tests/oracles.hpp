#ifndef HILALI_TESTS_ORACLES_HPP
#define HILALI_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the implementation paths they
// check: a power-series count of monomials, a minor-based rank, and a plain
// Gauss rank over Q.

#include <vector>

#include "hilali/linalg.hpp"
#include "hilali/model.hpp"

namespace hilali::oracle {

// Coefficients of prod_even 1/(1 - t^deg) * prod_odd (1 + t^deg) through
// degree cap: the Hilbert series of the free graded-commutative algebra.
inline std::vector<BigInt> hilbert_series(const SullivanModel& m, long long cap) {
    std::vector<BigInt> series(static_cast<std::size_t>(cap) + 1);
    series[0] = BigInt(1);
    for (const auto& g : m.generators()) {
        std::vector<BigInt> next(series.size());
        if (g.is_odd()) {
            for (std::size_t k = 0; k < series.size(); ++k) {
                next[k] = series[k];
                if (k >= static_cast<std::size_t>(g.degree))
                    next[k] += series[k - static_cast<std::size_t>(g.degree)];
            }
        } else {
            // 1/(1 - t^d): running sum with stride d
            for (std::size_t k = 0; k < series.size(); ++k) {
                next[k] = series[k];
                if (k >= static_cast<std::size_t>(g.degree))
                    next[k] += next[k - static_cast<std::size_t>(g.degree)];
            }
        }
        series = std::move(next);
    }
    return series;
}

// Determinant by cofactor expansion; fine through 6x6.
inline Rational determinant(const QMatrix& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
    if (rows.empty()) return Rational(1);
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Rational det(0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Rational a = m.at(rows[0], cols[j]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Rational minor = determinant(m, sub_rows, sub_cols);
        det += (j % 2 == 0 ? a : -a) * minor;
    }
    return det;
}

// Rank as the largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const QMatrix& m) {
    std::size_t best = 0;
    std::vector<std::size_t> rows, cols;
    auto choose = [&](auto&& self, std::vector<std::size_t>& out, std::size_t from,
                      std::size_t total, std::size_t k, auto&& then) -> bool {
        if (out.size() == k) return then();
        for (std::size_t i = from; i < total; ++i) {
            out.push_back(i);
            if (self(self, out, i + 1, total, k, then)) return true;
            out.pop_back();
        }
        return false;
    };
    std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = kmax; k >= 1; --k) {
        rows.clear();
        bool found = choose(
            choose, rows, 0, m.rows(), k, [&]() -> bool {
                cols.clear();
                return choose(choose, cols, 0, m.cols(), k,
                              [&]() -> bool { return !determinant(m, rows, cols).is_zero(); });
            });
        if (found) {
            best = k;
            break;
        }
    }
    return best;
}

// Plain rational Gaussian elimination rank, no Bareiss.
inline std::size_t rank_plain_gauss(QMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t p = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(p, c));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col) / m.at(rank, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace hilali::oracle

#endif
