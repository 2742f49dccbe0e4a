#include "hilali/invariants.hpp"

#include <algorithm>
#include <map>

namespace hilali {

long long Exponents::dimension_formula() const {
    long long n = 0;
    for (auto b : odd) n += 2 * b - 1;
    for (auto a : even) n -= 2 * a - 1;
    return n;
}

Exponents exponents_of(const SullivanModel& minimal) {
    Exponents e;
    for (const auto& g : minimal.generators()) {
        if (g.is_odd())
            e.odd.push_back((g.degree + 1) / 2);
        else
            e.even.push_back(g.degree / 2);
    }
    std::sort(e.even.begin(), e.even.end());
    std::sort(e.odd.begin(), e.odd.end());
    return e;
}

Polynomial pure_differential_of(const SullivanModel& m, std::size_t gen) {
    const Polynomial& d = m.differential_of(gen);
    Polynomial out = m.zero();
    if (!m.generator(gen).is_odd()) return out;
    for (const auto& [mono, coef] : d.terms()) {
        bool evens_only = true;
        for (std::size_t g = 0; g < m.generator_count(); ++g)
            if (mono.exponent(g) && m.generator(g).is_odd()) {
                evens_only = false;
                break;
            }
        if (evens_only) out.add_term(mono, coef);
    }
    return out;
}

namespace {

// dim of degree-k part of Q[x_even]/(pure images), by exact rank of the
// ideal slice in the monomial basis of the even subalgebra.
std::size_t quotient_dim(const SullivanModel& even_part,
                         const std::vector<Polynomial>& images, long long k) {
    std::vector<Monomial> basis = even_part.monomial_basis(k);
    if (basis.empty()) return 0;
    QMatrix span(basis.size(), 0);
    for (const auto& s : images) {
        auto sd = s.homogeneous_degree();
        if (!sd || *sd > k) continue;
        for (const Monomial& m : even_part.monomial_basis(k - *sd)) {
            Polynomial prod = even_part.multiply(even_part.monomial_poly(m, Rational(1)), s);
            span.append_column(coordinates(prod, basis));
        }
    }
    return basis.size() - rank_bareiss(span);
}

}  // namespace

EllipticityResult ellipticity_check(const SullivanModel& m, std::optional<long long> user_cap) {
    DSquaredReport d2 = m.check_d_squared();
    if (!d2.ok)
        throw ModelError("ellipticity_check: d^2 != 0 at generator '" +
                         m.generator(d2.failing_generator).name + "'");

    LinearPartReduction red = linear_part_reduction(m);
    const SullivanModel& mp = red.minimal_part;

    EllipticityResult res;
    if (red.dim_pi_even == 0) {
        // Lambda of odd generators is finite dimensional no matter what d is
        res.status = Ellipticity::elliptic;
        res.note = "no even generators in the minimal part";
        return res;
    }

    // even subalgebra with the pure images of the odd generators
    std::vector<Generator> evens;
    std::vector<std::size_t> even_slot(mp.generator_count());
    for (const auto& g : mp.generators()) {
        if (!g.is_odd()) {
            even_slot[g.index] = evens.size();
            evens.push_back(Generator{g.name, g.degree, evens.size()});
        }
    }
    SullivanModel even_part(evens, {});
    long long window = 0;
    for (const auto& g : evens) window = std::max(window, g.degree);

    std::vector<Polynomial> images;
    for (const auto& g : mp.generators()) {
        if (!g.is_odd()) continue;
        Polynomial s = pure_differential_of(mp, g.index);
        if (s.is_zero()) continue;
        Polynomial re = even_part.zero();
        for (const auto& [mono, coef] : s.terms()) {
            std::vector<std::uint32_t> e(evens.size(), 0);
            for (std::size_t i = 0; i < mp.generator_count(); ++i)
                if (mono.exponent(i)) e[even_slot[i]] = mono.exponent(i);
            re.add_term(even_part.make_monomial(e), coef);
        }
        images.push_back(re);
    }

    long long sound_cap = std::max(exponents_of(mp).dimension_formula(), 0LL) + window;
    long long cap = user_cap.value_or(sound_cap);
    res.cap_used = cap;

    long long run = 0;
    for (long long k = 1; k <= cap; ++k) {
        if (quotient_dim(even_part, images, k) == 0) {
            if (++run == window) {
                res.status = Ellipticity::elliptic;
                res.window_start = k - window + 1;
                res.window_length = window;
                return res;
            }
        } else {
            run = 0;
        }
    }

    if (cap >= sound_cap) {
        res.status = Ellipticity::not_elliptic;
        res.note = "no vanishing window up to the sound cap; the even quotient is infinite dimensional";
    } else {
        res.status = Ellipticity::undecided_at_cap;
        res.note = "no vanishing window within the user cap " + std::to_string(cap) +
                   "; a decision needs cap >= " + std::to_string(sound_cap);
    }
    return res;
}

EllipticInvariants compute_invariants(const SullivanModel& m) {
    EllipticityResult ell = ellipticity_check(m);
    if (ell.status != Ellipticity::elliptic)
        throw ModelError("invariants: model is not elliptic (" + ell.note + ")");

    LinearPartReduction red = linear_part_reduction(m);
    EllipticInvariants inv;
    inv.dim_pi_even = red.dim_pi_even;
    inv.dim_pi_odd = red.dim_pi_odd;
    inv.chi_pi = static_cast<long long>(red.dim_pi_odd) - static_cast<long long>(red.dim_pi_even);
    inv.exponents = exponents_of(red.minimal_part);
    inv.formal_dimension = inv.exponents.dimension_formula();
    inv.betti = betti_table(m, std::max(inv.formal_dimension, 0LL));
    inv.dim_h_total = inv.betti.total;
    inv.chi = inv.betti.euler_characteristic();
    inv.hilali = Rational(static_cast<long long>(inv.dim_pi_total()),
                          static_cast<long long>(inv.dim_h_total));
    return inv;
}

F0Check f0_check_and_formula(const EllipticInvariants& inv) {
    F0Check out;
    out.is_f0 = inv.chi > 0;
    if (!out.is_f0) return out;
    Rational prod(1);
    for (auto b : inv.exponents.odd) prod *= Rational(b);
    for (auto a : inv.exponents.even) prod /= Rational(a);
    out.predicted_dim_h = prod;
    return out;
}

ClassPredicates class_predicates(const SullivanModel& minimal) {
    QMatrix d0 = linear_part_matrix(minimal);
    for (std::size_t r = 0; r < d0.rows(); ++r)
        for (std::size_t c = 0; c < d0.cols(); ++c)
            if (!d0.at(r, c).is_zero())
                throw ModelError("class_predicates: model is not minimal");

    ClassPredicates out;
    const std::size_t n = minimal.generator_count();
    std::vector<bool> in_stage0(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const Generator& g = minimal.generator(i);
        if (!g.is_odd()) {
            in_stage0[i] = minimal.differential_of(i).is_zero();
            continue;
        }
        if (minimal.differential_of(i).is_zero()) {
            out.w0.push_back(i);
            in_stage0[i] = true;
        } else {
            out.w1.push_back(i);
        }
    }

    auto lands_in = [&](const Polynomial& p, auto&& allowed) {
        for (const auto& [mono, coef] : p.terms())
            for (std::size_t g = 0; g < n; ++g)
                if (mono.exponent(g) && !allowed(g)) return false;
        return true;
    };

    out.is_pure = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Generator& g = minimal.generator(i);
        if (!g.is_odd()) {
            if (!minimal.differential_of(i).is_zero()) out.is_pure = false;
        } else if (!lands_in(minimal.differential_of(i),
                             [&](std::size_t j) { return !minimal.generator(j).is_odd(); })) {
            out.is_pure = false;
        }
    }

    out.is_two_stage = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Generator& g = minimal.generator(i);
        if (!g.is_odd() && !minimal.differential_of(i).is_zero()) {
            out.is_two_stage = false;  // even generators must be closed
            break;
        }
    }
    if (out.is_two_stage)
        for (std::size_t i : out.w1)
            if (!lands_in(minimal.differential_of(i), [&](std::size_t j) {
                    return !minimal.generator(j).is_odd() || in_stage0[j];
                })) {
                out.is_two_stage = false;
                break;
            }
    return out;
}

bool star_type_check(const SullivanModel& m) {
    EllipticityResult ell = ellipticity_check(m);
    if (!ell.is_elliptic()) throw ModelError("star_type_check: model is not elliptic");
    LinearPartReduction red = linear_part_reduction(m);
    return red.dim_pi_odd == 2 && red.dim_pi_even == 1;
}

}  // namespace hilali
