#include "hilali/fibration.hpp"

#include <algorithm>

#include "hilali/cohomology.hpp"

namespace hilali {

SullivanModel fibration_total_shell(const SullivanModel& base, const SullivanModel& fiber) {
    std::vector<Generator> gens;
    gens.reserve(base.generator_count() + fiber.generator_count());
    for (const auto& g : base.generators()) gens.push_back(Generator{g.name, g.degree, gens.size()});
    for (const auto& g : fiber.generators()) {
        if (base.find_generator(g.name))
            throw ModelError("fibration: generator name '" + g.name +
                             "' appears in both base and fiber");
        gens.push_back(Generator{g.name, g.degree, gens.size()});
    }
    return SullivanModel(gens, {});
}

namespace {

// lift a polynomial of a part model into the total generator list at offset
Polynomial lift(const SullivanModel& part, const Polynomial& p, const SullivanModel& total,
                std::size_t offset) {
    Polynomial out = total.zero();
    for (const auto& [mono, coef] : p.terms()) {
        std::vector<std::uint32_t> e(total.generator_count(), 0);
        for (std::size_t i = 0; i < part.generator_count(); ++i) e[offset + i] = mono.exponent(i);
        out.add_term(total.make_monomial(e), coef);
    }
    return out;
}

}  // namespace

FibrationModel build_fibration(const SullivanModel& base, const SullivanModel& fiber,
                               const std::vector<Polynomial>& perturbation) {
    if (perturbation.size() != fiber.generator_count())
        throw ModelError("fibration: one perturbation entry per fiber generator required");

    SullivanModel shell = fibration_total_shell(base, fiber);
    const std::size_t nb = base.generator_count();

    std::vector<Polynomial> diffs(shell.generator_count(), shell.zero());
    for (std::size_t i = 0; i < nb; ++i) diffs[i] = lift(base, base.differential_of(i), shell, 0);
    for (std::size_t i = 0; i < fiber.generator_count(); ++i) {
        Polynomial p = shell.zero();
        for (const auto& [mono, coef] : perturbation[i].terms()) {
            bool touches_base = false;
            for (std::size_t g = 0; g < nb; ++g)
                if (mono.exponent(g)) {
                    touches_base = true;
                    break;
                }
            if (!touches_base)
                throw ModelError("fibration: perturbation of '" + fiber.generator(i).name +
                                 "' has a term without base generators");
            p.add_term(shell.make_monomial(mono.exponents()), coef);
        }
        diffs[nb + i] = lift(fiber, fiber.differential_of(i), shell, nb) + p;
    }

    FibrationModel f{base, fiber, SullivanModel(shell.generators(), diffs), nb};

    DSquaredReport d2 = f.total.check_d_squared();
    if (!d2.ok) {
        throw ModelError("fibration rejected: d^2 != 0 at generator '" +
                         f.total.generator(d2.failing_generator).name + "'");
    }

    // projection W -> 0 must recover the fiber differential
    std::vector<bool> kill(f.total.generator_count(), false);
    for (std::size_t i = 0; i < nb; ++i) kill[i] = true;
    for (std::size_t i = 0; i < fiber.generator_count(); ++i) {
        Polynomial projected = f.total.project_out(f.total.differential_of(nb + i), kill);
        Polynomial expected = lift(fiber, fiber.differential_of(i), f.total, nb);
        if (projected != expected)
            throw ModelError("fibration rejected: projection does not recover the fiber "
                             "differential of '" + fiber.generator(i).name + "'");
    }
    return f;
}

TransgressionAnalysis transgression_analysis(const FibrationModel& f) {
    TransgressionAnalysis out;
    out.d0 = linear_part_matrix(f.total);

    LinearPartReduction red = linear_part_reduction(f.total);
    out.contracted_pairs = red.pairs;
    out.dim_pi_even_x = red.dim_pi_even;
    out.dim_pi_odd_x = red.dim_pi_odd;

    // rank of d0 must agree with the number of cancelled pairs: two
    // independent computations of the same contraction count
    QMatrix full = out.d0;
    std::size_t rank_d0 = rank_bareiss(full);
    if (rank_d0 != red.pairs.size())
        throw ModelError("transgression: rank(d0) disagrees with the reduction pair count");

    // restriction of d0 to odd fiber generators
    QMatrix fiber_odd(out.d0.rows(), 0);
    for (std::size_t i = 0; i < f.fiber.generator_count(); ++i) {
        if (!f.fiber.generator(i).is_odd()) continue;
        std::vector<Rational> col(out.d0.rows());
        for (std::size_t r = 0; r < out.d0.rows(); ++r) col[r] = out.d0.at(r, f.fiber_slot(i));
        fiber_odd.append_column(col);
    }
    out.c_fiber_odd = rank_bareiss(fiber_odd);

    for (const auto& p : out.contracted_pairs) {
        bool src_fiber_odd = p.source_index >= f.base_gen_count && p.source_degree % 2 != 0;
        bool tgt_base_even = p.target_index < f.base_gen_count && p.target_degree % 2 == 0;
        if (!src_fiber_odd || !tgt_base_even) out.pairs_all_fiber_odd_to_base_even = false;
    }
    return out;
}

bool FibrationReport::all_asserted_hold() const {
    for (const auto& it : items)
        if (it.applicable && it.asserted && !it.holds) return false;
    return true;
}

const CheckItem* FibrationReport::find(const std::string& name) const {
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

namespace {

CheckItem ge_item(const std::string& name, const Rational& lhs, const Rational& rhs,
                  bool asserted, const std::string& detail) {
    // lhs >= rhs, slack = lhs - rhs
    CheckItem it;
    it.name = name;
    it.asserted = asserted;
    it.slack = lhs - rhs;
    it.holds = it.slack >= Rational(0);
    it.detail = detail;
    return it;
}

CheckItem lt_item(const std::string& name, const Rational& lhs, const Rational& rhs,
                  bool asserted, const std::string& detail) {
    // lhs < rhs strictly, slack = rhs - lhs
    CheckItem it;
    it.name = name;
    it.asserted = asserted;
    it.strict = true;
    it.slack = rhs - lhs;
    it.holds = it.slack > Rational(0);
    it.detail = detail;
    return it;
}

template <class T>
Rational q(T v) {
    return Rational(static_cast<long long>(v));
}

void validate_split(const SullivanModel& space, const Prop5Split& split, const char* who) {
    std::vector<bool> seen(space.generator_count(), false);
    for (std::size_t i : split.t) {
        if (i >= space.generator_count() || seen[i])
            throw ModelError(std::string(who) + ": bad T index in decomposition");
        seen[i] = true;
        if (!space.generator(i).is_odd() || !space.differential_of(i).is_zero())
            throw ModelError(std::string(who) +
                             ": T part must consist of closed odd generators");
    }
    for (std::size_t i : split.v) {
        if (i >= space.generator_count() || seen[i])
            throw ModelError(std::string(who) + ": bad V index in decomposition");
        seen[i] = true;
    }
    for (bool s : seen)
        if (!s) throw ModelError(std::string(who) + ": decomposition must cover all generators");

    // V part must close under d and be positively elliptic
    std::vector<Generator> vgens;
    std::vector<std::size_t> slot(space.generator_count(), SIZE_MAX);
    for (std::size_t i : split.v) {
        slot[i] = vgens.size();
        vgens.push_back(Generator{space.generator(i).name, space.generator(i).degree, vgens.size()});
    }
    SullivanModel vshell(vgens, {});
    std::vector<Polynomial> vdiffs;
    for (std::size_t i : split.v) {
        Polynomial re = vshell.zero();
        for (const auto& [mono, coef] : space.differential_of(i).terms()) {
            std::vector<std::uint32_t> e(vgens.size(), 0);
            for (std::size_t g = 0; g < space.generator_count(); ++g) {
                if (!mono.exponent(g)) continue;
                if (slot[g] == SIZE_MAX)
                    throw ModelError(std::string(who) +
                                     ": V part differential leaves the V subalgebra");
                e[slot[g]] = mono.exponent(g);
            }
            re.add_term(vshell.make_monomial(e), coef);
        }
        vdiffs.push_back(re);
    }
    SullivanModel vpart(vgens, vdiffs);
    EllipticityResult ell = ellipticity_check(vpart);
    if (!ell.is_elliptic())
        throw ModelError(std::string(who) + ": V part of the decomposition is not elliptic");
    LinearPartReduction red = linear_part_reduction(vpart);
    if (red.dim_pi_even != red.dim_pi_odd)
        throw ModelError(std::string(who) + ": V part of the decomposition is not positively elliptic");
}

}  // namespace

FibrationReport analyze_fibration(const FibrationModel& f, bool formal_all,
                                  const std::optional<Prop5Split>& fiber_split,
                                  const std::optional<Prop5Split>& base_split) {
    FibrationReport rep;
    rep.fiber = compute_invariants(f.fiber);
    rep.base = compute_invariants(f.base);
    rep.total = compute_invariants(f.total);

    TransgressionAnalysis tr = transgression_analysis(f);
    rep.contracted_pairs = tr.contracted_pairs.size();
    rep.pi_trivial = rep.contracted_pairs == 0;

    if (!tr.pairs_all_fiber_odd_to_base_even)
        throw ModelError("fibration of elliptic spaces contracted a pair that is not "
                         "fiber-odd against base-even");
    if (tr.dim_pi_x() !=
        rep.fiber.dim_pi_total() + rep.base.dim_pi_total() - 2 * rep.contracted_pairs)
        throw ModelError("contraction bookkeeping broke: pi(X) != pi(F) + pi(B) - 2c");

    const Rational h_f = rep.fiber.hilali, h_b = rep.base.hilali, h_x = rep.total.hilali;
    rep.h_product = q(rep.fiber.dim_pi_total() + rep.base.dim_pi_total()) /
                    (q(rep.fiber.dim_h_total) * q(rep.base.dim_h_total));

    const bool fiber_f0 = rep.fiber.chi > 0;

    // structural cross-checks that hold for any elliptic fibration
    rep.items.push_back(ge_item("formal_dim_additivity",
                                q(rep.total.formal_dimension),
                                q(rep.fiber.formal_dimension + rep.base.formal_dimension), true,
                                "formal dim X vs formal dim F + formal dim B (equality)"));
    rep.items.back().holds =
        rep.total.formal_dimension == rep.fiber.formal_dimension + rep.base.formal_dimension;
    rep.items.push_back(ge_item("chi_pi_additivity", q(rep.total.chi_pi),
                                q(rep.fiber.chi_pi + rep.base.chi_pi), true,
                                "chi_pi X vs chi_pi F + chi_pi B (equality)"));
    rep.items.back().holds = rep.total.chi_pi == rep.fiber.chi_pi + rep.base.chi_pi;

    // homotopy-dimension chains and their sum
    rep.items.push_back(ge_item("pi_odd_x_ge_pi_odd_b", q(rep.total.dim_pi_odd),
                                q(rep.base.dim_pi_odd), true, "pi_odd(X) >= pi_odd(B)"));
    rep.items.push_back(ge_item("pi_odd_b_ge_pi_even_b", q(rep.base.dim_pi_odd),
                                q(rep.base.dim_pi_even), true, "pi_odd(B) >= pi_even(B)"));
    rep.items.push_back(ge_item("pi_odd_x_ge_pi_even_x", q(rep.total.dim_pi_odd),
                                q(rep.total.dim_pi_even), true, "pi_odd(X) >= pi_even(X)"));
    rep.items.push_back(ge_item("pi_even_x_ge_pi_even_f", q(rep.total.dim_pi_even),
                                q(rep.fiber.dim_pi_even), true, "pi_even(X) >= pi_even(F)"));
    rep.items.push_back(ge_item("pi_odd_x_ge_pi_odd_f", q(rep.total.dim_pi_odd),
                                q(rep.fiber.dim_pi_odd), true, "pi_odd(X) >= pi_odd(F)"));
    rep.items.push_back(ge_item(
        "contraction_sum_bound", q(rep.total.dim_pi_total() + 2 * rep.total.dim_pi_odd),
        q(rep.fiber.dim_pi_total() + rep.base.dim_pi_total()), true,
        "pi(X) + 2 pi_odd(X) >= pi(F) + pi(B)"));

    // ingredient of the halving bound: asserted only for an F0 fiber
    {
        CheckItem it = ge_item("two_pi_x_ge_pi_f_plus_pi_b", q(2 * rep.total.dim_pi_total()),
                               q(rep.fiber.dim_pi_total() + rep.base.dim_pi_total()), fiber_f0,
                               "2 pi(X) >= pi(F) + pi(B); asserted when F is positively elliptic");
        rep.items.push_back(it);
    }

    rep.items.push_back(ge_item("serre_bound",
                                q(rep.fiber.dim_h_total) * q(rep.base.dim_h_total),
                                q(rep.total.dim_h_total), true,
                                "dim H(X) <= dim H(F) * dim H(B)"));

    rep.items.push_back(ge_item("three_h_bound", q(3) * h_x, rep.h_product, true,
                                "h(F x B) <= 3 h(X)"));

    {
        CheckItem it = ge_item("two_h_bound_f0_fiber", q(2) * h_x, rep.h_product, fiber_f0,
                               "h(F x B) <= 2 h(X); asserted when F is positively elliptic");
        it.applicable = fiber_f0;
        rep.items.push_back(it);
    }

    rep.items.push_back(ge_item("conjecture_left", h_x, rep.h_product * Rational(1, 2),
                                formal_all, "h(F x B)/2 <= h(X); asserted for formal fibrations"));
    rep.items.push_back(lt_item("conjecture_right", h_x, h_f + h_b + Rational(1, 4), formal_all,
                                "h(X) < h(F) + h(B) + 1/4 (strict); asserted for formal fibrations"));

    // TNHZ and pi-triviality with their implied estimates
    FiberRestriction restr =
        restriction_to_fiber(f.total, f.base_gen_count, f.fiber, rep.fiber.formal_dimension);
    rep.tnhz = restr.surjective;
    {
        CheckItem it = ge_item("tnhz_implies_h_sum", h_f + h_b, h_x, rep.tnhz,
                               "h(X) <= h(F) + h(B) under TNHZ");
        it.applicable = rep.tnhz;
        rep.items.push_back(it);
    }
    {
        CheckItem it = ge_item("pi_trivial_implies_product_bound", h_x, rep.h_product,
                               rep.pi_trivial, "h(F x B) <= h(X) under pi-triviality");
        it.applicable = rep.pi_trivial;
        rep.items.push_back(it);
    }

    // halving bound and the Eq-4 diagnostic, when decompositions are given
    if (fiber_split && base_split) {
        validate_split(f.fiber, *fiber_split, "fiber decomposition");
        validate_split(f.base, *base_split, "base decomposition");
        rep.has_splits = true;

        QMatrix tf_cols(tr.d0.rows(), 0);
        for (std::size_t i : fiber_split->t) {
            std::vector<Rational> col(tr.d0.rows());
            for (std::size_t r = 0; r < tr.d0.rows(); ++r)
                col[r] = tr.d0.at(r, f.fiber_slot(i));
            tf_cols.append_column(col);
        }
        rep.c_tf = rank_bareiss(tf_cols);

        Rational pow2c(1);
        for (std::size_t i = 0; i < rep.c_tf; ++i) pow2c *= Rational(2);
        rep.items.push_back(ge_item(
            "halving_bound",
            q(rep.fiber.dim_h_total) * q(rep.base.dim_h_total) / pow2c, q(rep.total.dim_h_total),
            formal_all, "dim H(X) <= dim H(F x B) / 2^c, c = dim im(d0|T_F)"));

        long long e4 = rep.base.chi_pi + static_cast<long long>(rep.base.dim_pi_even);
        Rational pow2e4(1);
        for (long long i = 0; i < e4; ++i) pow2e4 *= Rational(2);
        CheckItem diag = ge_item("dim_h_lower_bound_diagnostic", q(rep.total.dim_h_total),
                                 pow2e4 * q(rep.fiber.dim_h_total), false,
                                 "diagnostic only: dim H(X) >= 2^(chi_pi(B)+pi_even(B)) * dim H(F)");
        rep.items.push_back(diag);
    }

    return rep;
}

}  // namespace hilali
