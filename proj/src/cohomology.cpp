#include "hilali/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilali {

CochainMatrix cochain_matrix(const SullivanModel& m, long long degree) {
    CochainMatrix cm;
    cm.degree = degree;
    cm.domain_basis = m.monomial_basis(degree);
    cm.codomain_basis = m.monomial_basis(degree + 1);
    cm.matrix = QMatrix(cm.codomain_basis.size(), cm.domain_basis.size());

    std::map<Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < cm.codomain_basis.size(); ++r) row_of[cm.codomain_basis[r]] = r;

    for (std::size_t c = 0; c < cm.domain_basis.size(); ++c) {
        Polynomial dm = m.apply_differential(m.monomial_poly(cm.domain_basis[c], Rational(1)));
        for (const auto& [mono, coef] : dm.terms()) {
            auto it = row_of.find(mono);
            if (it == row_of.end())
                throw ModelError("differential image leaves the expected degree");
            cm.matrix.at(it->second, c) = coef;
        }
    }
    return cm;
}

std::vector<Rational> coordinates(const Polynomial& p, const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    std::vector<Rational> v(basis.size());
    for (const auto& [mono, coef] : p.terms()) {
        auto it = pos.find(mono);
        if (it == pos.end()) throw ModelError("polynomial term outside the given basis");
        v[it->second] = coef;
    }
    return v;
}

long long BettiTable::euler_characteristic() const {
    long long chi = 0;
    for (const auto& [k, b] : betti) chi += (k % 2 == 0) ? static_cast<long long>(b)
                                                         : -static_cast<long long>(b);
    return chi;
}

std::size_t betti_number(const SullivanModel& m, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    std::size_t dim_k = m.monomial_basis(k).size();
    std::size_t rank_k = rank_bareiss(cochain_matrix(m, k).matrix);
    std::size_t rank_km1 = rank_bareiss(cochain_matrix(m, k - 1).matrix);
    return dim_k - rank_k - rank_km1;
}

BettiTable betti_table(const SullivanModel& m, long long cap) {
    if (cap < 0) throw std::invalid_argument("betti_table: negative cap");
    BettiTable t;
    t.cap = cap;
    std::size_t prev_rank = 0;  // rank of d_{k-1}
    for (long long k = 0; k <= cap; ++k) {
        CochainMatrix cm = cochain_matrix(m, k);
        std::size_t dim_k = cm.domain_basis.size();
        std::size_t rank_k = rank_bareiss(cm.matrix);
        std::size_t b = dim_k - rank_k - prev_rank;
        if (b) {
            t.betti[k] = b;
            t.formal_dimension = k;
            t.total += b;
        }
        prev_rank = rank_k;
    }
    t.status = t.at(cap) != 0 ? BettiStatus::nonzero_at_cap : BettiStatus::complete;
    return t;
}

bool poincare_check(const BettiTable& t) {
    long long n = t.formal_dimension;
    for (long long k = 0; k <= n; ++k)
        if (t.at(k) != t.at(n - k)) return false;
    return true;
}

std::vector<Polynomial> cohomology_representatives(const SullivanModel& m, long long k) {
    std::vector<Polynomial> reps;
    if (k < 0) return reps;
    if (k == 0) {
        reps.push_back(m.one());
        return reps;
    }
    CochainMatrix cm = cochain_matrix(m, k);
    if (cm.domain_basis.empty()) return reps;
    std::vector<std::vector<Rational>> cocycles = kernel_basis(cm.matrix);
    if (cocycles.empty()) return reps;

    // coboundary columns: images of d_{k-1}
    CochainMatrix below = cochain_matrix(m, k - 1);
    QMatrix span(cm.domain_basis.size(), 0);
    for (std::size_t c = 0; c < below.matrix.cols(); ++c) {
        std::vector<Rational> col(below.matrix.rows());
        for (std::size_t r = 0; r < below.matrix.rows(); ++r) col[r] = below.matrix.at(r, c);
        span.append_column(col);
    }
    std::size_t base_rank = rank_bareiss(span);

    // Keep cocycles that enlarge the span beyond the coboundaries.
    std::size_t current = base_rank;
    for (const auto& z : cocycles) {
        span.append_column(z);
        std::size_t r = rank_bareiss(span);
        if (r > current) {
            current = r;
            Polynomial rep = m.zero();
            for (std::size_t i = 0; i < z.size(); ++i)
                if (!z[i].is_zero()) rep.add_term(cm.domain_basis[i], z[i]);
            reps.push_back(rep);
        }
    }
    return reps;
}

FiberRestriction restriction_to_fiber(const SullivanModel& total, std::size_t base_gen_count,
                                      const SullivanModel& fiber, long long fiber_cap) {
    FiberRestriction out;
    std::vector<bool> kill(total.generator_count(), false);
    for (std::size_t i = 0; i < base_gen_count; ++i) kill[i] = true;

    for (long long k = 1; k <= fiber_cap; ++k) {
        CochainMatrix fib_k = cochain_matrix(fiber, k);
        std::size_t fdim = fib_k.domain_basis.size();
        if (fdim == 0) continue;
        std::size_t rank_k = rank_bareiss(fib_k.matrix);
        CochainMatrix fib_below = cochain_matrix(fiber, k - 1);
        std::size_t rank_below = rank_bareiss(fib_below.matrix);
        std::size_t hk = fdim - rank_k - rank_below;
        if (hk == 0) continue;

        // span of coboundaries in the fiber
        QMatrix span(fdim, 0);
        for (std::size_t c = 0; c < fib_below.matrix.cols(); ++c) {
            std::vector<Rational> col(fdim);
            for (std::size_t r = 0; r < fdim; ++r) col[r] = fib_below.matrix.at(r, c);
            span.append_column(col);
        }

        // project total-space representatives and re-read them in the fiber
        for (const Polynomial& rep : cohomology_representatives(total, k)) {
            Polynomial projected = total.project_out(rep, kill);
            // rewrite in fiber variables: generator i of the fiber sits at
            // total index base_gen_count + i
            Polynomial in_fiber = fiber.zero();
            for (const auto& [mono, coef] : projected.terms()) {
                std::vector<std::uint32_t> e(fiber.generator_count(), 0);
                for (std::size_t i = 0; i < fiber.generator_count(); ++i)
                    e[i] = mono.exponent(base_gen_count + i);
                in_fiber.add_term(fiber.make_monomial(e), coef);
            }
            span.append_column(coordinates(in_fiber, fib_k.domain_basis));
        }

        // the images span H^k(fiber) iff together with the coboundaries they
        // reach the full cocycle space
        std::size_t reached = rank_bareiss(span);
        if (reached < rank_below + hk) {
            out.surjective = false;
            out.failing_degrees.push_back(k);
        }
    }
    return out;
}

}  // namespace hilali
