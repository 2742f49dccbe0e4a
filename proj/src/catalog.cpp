#include "hilali/catalog.hpp"

#include <algorithm>
#include <limits>

namespace hilali {

namespace {

long long checked_mul(long long a, long long b) {
    if (a != 0 && b > std::numeric_limits<long long>::max() / a)
        throw ModelError("degree arithmetic overflow");
    return a * b;
}

SullivanModel rename(const SullivanModel& m, const std::vector<std::string>& names) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < m.generator_count(); ++i)
        gens.push_back(Generator{names.at(i), m.generator(i).degree, i});
    std::vector<Polynomial> diffs;
    for (std::size_t i = 0; i < m.generator_count(); ++i) diffs.push_back(m.differential_of(i));
    return SullivanModel(gens, diffs);
}

}  // namespace

SullivanModel make_sphere(long long n) {
    if (n < 2) throw ModelError("make_sphere: need n >= 2");
    if (n % 2 != 0) {
        SullivanModel m = SullivanModel::build({{"y", n}});
        return m;
    }
    SullivanModel shell = SullivanModel::build({{"x", n}, {"y", 2 * n - 1}});
    std::vector<Polynomial> diffs{shell.zero(), shell.power(shell.generator_poly(0), 2)};
    return SullivanModel(shell.generators(), diffs);
}

SullivanModel make_cpn(long long n) {
    if (n < 1) throw ModelError("make_cpn: need n >= 1");
    SullivanModel shell = SullivanModel::build({{"x", 2}, {"y", 2 * n + 1}});
    std::vector<Polynomial> diffs{shell.zero(),
                                  shell.power(shell.generator_poly(0), static_cast<unsigned long>(n + 1))};
    return SullivanModel(shell.generators(), diffs);
}

SullivanModel make_hpn(long long n) {
    if (n < 1) throw ModelError("make_hpn: need n >= 1");
    SullivanModel shell = SullivanModel::build({{"x", 4}, {"y", 4 * n + 3}});
    std::vector<Polynomial> diffs{shell.zero(),
                                  shell.power(shell.generator_poly(0), static_cast<unsigned long>(n + 1))};
    return SullivanModel(shell.generators(), diffs);
}

SullivanModel make_product(const std::vector<SullivanModel>& factors) {
    std::vector<Generator> gens;
    std::vector<std::pair<std::size_t, std::size_t>> origin;  // (factor, gen)
    for (std::size_t f = 0; f < factors.size(); ++f) {
        for (const auto& g : factors[f].generators()) {
            gens.push_back(Generator{g.name + "_" + std::to_string(f + 1), g.degree, gens.size()});
            origin.emplace_back(f, g.index);
        }
    }
    SullivanModel shell(gens, {});
    std::vector<Polynomial> diffs;
    std::size_t offset = 0;
    std::vector<std::size_t> offsets(factors.size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
        offsets[f] = offset;
        offset += factors[f].generator_count();
    }
    for (auto [f, gi] : origin) {
        Polynomial re = shell.zero();
        for (const auto& [mono, coef] : factors[f].differential_of(gi).terms()) {
            std::vector<std::uint32_t> e(gens.size(), 0);
            for (std::size_t j = 0; j < factors[f].generator_count(); ++j)
                e[offsets[f] + j] = mono.exponent(j);
            re.add_term(shell.make_monomial(e), coef);
        }
        diffs.push_back(re);
    }
    return SullivanModel(gens, diffs);
}

SullivanModel make_star_type(long long even_degree, long long relation_power,
                             long long extra_odd_degree) {
    if (even_degree < 2 || even_degree % 2 != 0)
        throw ModelError("make_star_type: even_degree must be even and >= 2");
    if (relation_power < 2)
        throw ModelError("make_star_type: relation_power must be >= 2 "
                         "(power 1 is a contractible pair, not a minimal model)");
    if (extra_odd_degree < 3 || extra_odd_degree % 2 == 0)
        throw ModelError("make_star_type: extra_odd_degree must be odd and >= 3");
    long long zdeg = checked_mul(even_degree, relation_power) - 1;
    SullivanModel shell =
        SullivanModel::build({{"x", even_degree}, {"z", zdeg}, {"y", extra_odd_degree}});
    std::vector<Polynomial> diffs{
        shell.zero(),
        shell.power(shell.generator_poly(0), static_cast<unsigned long>(relation_power)),
        shell.zero()};
    return SullivanModel(shell.generators(), diffs);
}

// ---------------------------------------------------------------- catalog

namespace {

KnownInvariants known(std::size_t pe, std::size_t po, std::size_t dh, long long fd, long long chi,
                      long long chi_pi, Rational h) {
    return KnownInvariants{pe, po, dh, fd, chi, chi_pi, h};
}

CatalogEntry entry_sphere(long long n) {
    CatalogEntry e{"sphere:" + std::to_string(n), make_sphere(n), std::nullopt,
                   true, "", std::nullopt, true, true};
    if (n % 2 != 0) {
        e.known = known(0, 1, 2, n, 0, 1, Rational(1, 2));
        e.formality_provenance = "odd sphere";
        e.split = Prop5Split{{0}, {}};
    } else {
        e.known = known(1, 1, 2, n, 2, 0, Rational(1));
        e.formality_provenance = "positively elliptic";
        e.split = Prop5Split{{}, {0, 1}};
    }
    return e;
}

CatalogEntry entry_cpn(long long n) {
    CatalogEntry e{"cpn:" + std::to_string(n), make_cpn(n),
                   known(1, 1, static_cast<std::size_t>(n + 1), 2 * n, n + 1, 0,
                         Rational(2, n + 1)),
                   true, "positively elliptic", Prop5Split{{}, {0, 1}}, true, true};
    return e;
}

CatalogEntry entry_hpn(long long n) {
    CatalogEntry e{"hpn:" + std::to_string(n), make_hpn(n),
                   known(1, 1, static_cast<std::size_t>(n + 1), 4 * n, n + 1, 0,
                         Rational(2, n + 1)),
                   true, "positively elliptic", Prop5Split{{}, {0, 1}}, true, true};
    return e;
}

CatalogEntry entry_star(const std::string& key, long long k2, long long p, long long q) {
    CatalogEntry e{key, make_star_type(k2, p, q), std::nullopt, true,
                   "one even and two odd homotopy generators", Prop5Split{{2}, {0, 1}},
                   true, true};
    long long fd = k2 * (p - 1) + q;
    e.known = known(1, 2, static_cast<std::size_t>(2 * p), fd, 0, 1, Rational(3, 2 * p));
    return e;
}

}  // namespace

std::vector<CatalogEntry> catalog_models() {
    std::vector<CatalogEntry> out;
    for (long long n : {3, 5, 7, 9}) out.push_back(entry_sphere(n));
    for (long long n : {2, 4, 6, 8}) out.push_back(entry_sphere(n));
    for (long long n = 1; n <= 5; ++n) out.push_back(entry_cpn(n));
    for (long long n : {1, 2}) out.push_back(entry_hpn(n));

    {
        CatalogEntry e{"product:s3xs5", make_product({make_sphere(3), make_sphere(5)}),
                       known(0, 2, 4, 8, 0, 2, Rational(1, 2)), true,
                       "product of odd spheres", Prop5Split{{0, 1}, {}}, true, true};
        out.push_back(e);
    }
    {
        CatalogEntry e{"product:s3xs3xs7",
                       make_product({make_sphere(3), make_sphere(3), make_sphere(7)}),
                       known(0, 3, 8, 13, 0, 3, Rational(3, 8)), true,
                       "product of odd spheres", Prop5Split{{0, 1, 2}, {}}, true, true};
        out.push_back(e);
    }
    {
        CatalogEntry e{"product:cp2xs3", make_product({make_cpn(2), make_sphere(3)}),
                       known(1, 2, 6, 7, 0, 1, Rational(1, 2)), true,
                       "product of formal spaces", Prop5Split{{2}, {0, 1}}, true, true};
        out.push_back(e);
    }

    out.push_back(entry_star("star:2,2,7", 2, 2, 7));
    out.push_back(entry_star("star:2,3,5", 2, 3, 5));

    // rational stand-ins for the positively curved catalog
    {
        // full flag manifold type: Q[x,y] modulo a regular sequence in
        // degrees 4 and 6
        SullivanModel shell =
            SullivanModel::build({{"x", 2}, {"y", 2}, {"u", 3}, {"v", 5}});
        Polynomial x = shell.generator_poly(0), y = shell.generator_poly(1);
        Polynomial du = shell.power(x, 2) + shell.multiply(x, y) + shell.power(y, 2);
        Polynomial dv = shell.multiply(shell.power(x, 2), y) + shell.multiply(x, shell.power(y, 2));
        SullivanModel m(shell.generators(), {shell.zero(), shell.zero(), du, dv});
        CatalogEntry e{"wallach:w6", m, known(2, 2, 6, 6, 6, 0, Rational(2, 3)), true,
                       "positively elliptic", Prop5Split{{}, {0, 1, 2, 3}}, true, true};
        out.push_back(e);
    }
    {
        SullivanModel shell = SullivanModel::build({{"x", 8}, {"y", 23}});
        SullivanModel m(shell.generators(), {shell.zero(), shell.power(shell.generator_poly(0), 3)});
        CatalogEntry e{"cayley:cap2", m, known(1, 1, 3, 16, 3, 0, Rational(2, 3)), true,
                       "positively elliptic", Prop5Split{{}, {0, 1}}, true, true};
        out.push_back(e);
    }
    {
        CatalogEntry e = entry_star("aloff-wallach:w7", 2, 2, 5);
        out.push_back(e);
    }
    {
        CatalogEntry e = entry_star("berger:b13", 2, 4, 7);
        out.push_back(e);
    }
    {
        CatalogEntry e{"berger:b7", make_sphere(7), known(0, 1, 2, 7, 0, 1, Rational(1, 2)),
                       true, "odd sphere", Prop5Split{{0}, {}}, true, true};
        out.push_back(e);
    }

    // witnesses used by the checks
    {
        // non-minimal presentation of the 7-sphere from the Hopf fibration
        SullivanModel shell = SullivanModel::build({{"f", 3}, {"b", 4}, {"t", 7}});
        SullivanModel m(shell.generators(),
                        {shell.generator_poly(1), shell.zero(),
                         shell.power(shell.generator_poly(1), 2)});
        CatalogEntry e{"witness:hopf-total", m, known(0, 1, 2, 7, 0, 1, Rational(1, 2)),
                       true, "reduces to an odd sphere", std::nullopt, false, false};
        out.push_back(e);
    }
    {
        // contractible pair with even bottom: the degree-formula trap
        SullivanModel shell = SullivanModel::build({{"x", 2}, {"y", 3}});
        SullivanModel m(shell.generators(), {shell.generator_poly(1), shell.zero()});
        CatalogEntry e{"witness:contractible-pair", m, known(0, 0, 1, 0, 1, 0, Rational(0)),
                       true, "contractible", std::nullopt, false, false};
        out.push_back(e);
    }
    {
        // two-stage but not pure: stage-1 target mixes closed odd generators
        SullivanModel shell =
            SullivanModel::build({{"x", 2}, {"u", 3}, {"w", 5}, {"v", 7}});
        Polynomial dv = shell.power(shell.generator_poly(0), 4) +
                        shell.multiply(shell.generator_poly(1), shell.generator_poly(2));
        SullivanModel m(shell.generators(), {shell.zero(), shell.zero(), shell.zero(), dv});
        CatalogEntry e{"witness:two-stage-nonpure", m,
                       known(1, 3, 16, 14, 0, 2, Rational(1, 4)), false, "", std::nullopt,
                       false, true};
        out.push_back(e);
    }
    {
        // hyperbolic: Q[x,x']/(xx') is infinite dimensional
        SullivanModel shell = SullivanModel::build({{"x", 2}, {"xp", 2}, {"y", 3}});
        SullivanModel m(shell.generators(),
                        {shell.zero(), shell.zero(),
                         shell.multiply(shell.generator_poly(0), shell.generator_poly(1))});
        CatalogEntry e{"witness:hyperbolic", m, std::nullopt, false, "", std::nullopt, false,
                       false};
        out.push_back(e);
    }
    return out;
}

std::optional<CatalogEntry> catalog_model(const std::string& key) {
    for (auto& e : catalog_models())
        if (e.key == key) return e;
    return std::nullopt;
}

std::vector<FibrationEntry> catalog_fibrations() {
    std::vector<FibrationEntry> out;

    auto sphere_named = [](long long n, const std::string& a, const std::string& b) {
        SullivanModel m = make_sphere(n);
        return n % 2 != 0 ? rename(m, {a}) : rename(m, {a, b});
    };

    {
        // S3 -> S7 -> S4
        SullivanModel base = sphere_named(4, "b4", "b7");
        SullivanModel fiber = sphere_named(3, "f3", "");
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"hopf:s3-s7-s4",
                         build_fibration(base, fiber, {shell.generator_poly(0)}), true,
                         "spheres throughout; total reduces to S7",
                         Prop5Split{{0}, {}}, Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        // S7 -> S15 -> S8
        SullivanModel base = sphere_named(8, "b8", "b15");
        SullivanModel fiber = sphere_named(7, "f7", "");
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"hopf:s7-s15-s8",
                         build_fibration(base, fiber, {shell.generator_poly(0)}), true,
                         "spheres throughout; total reduces to S15",
                         Prop5Split{{0}, {}}, Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        // S3 -> S11 -> HP2
        SullivanModel base = rename(make_hpn(2), {"b4", "b11"});
        SullivanModel fiber = sphere_named(3, "f3", "");
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"hopf:s3-s11-hp2",
                         build_fibration(base, fiber, {shell.generator_poly(0)}), true,
                         "total reduces to S11", Prop5Split{{0}, {}}, Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        // S3 over CP2 with d f3 = b2^2; the total is a one-even/two-odd model
        SullivanModel base = rename(make_cpn(2), {"b2", "b5"});
        SullivanModel fiber = sphere_named(3, "f3", "");
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"hopf:s3-over-cp2",
                         build_fibration(base, fiber, {shell.power(shell.generator_poly(0), 2)}),
                         true, "total has one even and two odd homotopy generators",
                         Prop5Split{{0}, {}}, Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        // twistor S2 -> CP3 -> S4
        SullivanModel base = sphere_named(4, "b4", "b7");
        SullivanModel fiber = rename(make_sphere(2), {"f2", "f3"});
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"twistor:cp3",
                         build_fibration(base, fiber,
                                         {shell.zero(), shell.generator_poly(0).scaled(Rational(-1))}),
                         true, "total reduces to CP3", Prop5Split{{}, {0, 1}},
                         Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        // twistor S2 -> CP5 -> HP2
        SullivanModel base = rename(make_hpn(2), {"b4", "b11"});
        SullivanModel fiber = rename(make_sphere(2), {"f2", "f3"});
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"twistor:cp5",
                         build_fibration(base, fiber,
                                         {shell.zero(), shell.generator_poly(0).scaled(Rational(-1))}),
                         true, "total reduces to CP5", Prop5Split{{}, {0, 1}},
                         Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        SullivanModel base = sphere_named(4, "b4", "b7");
        SullivanModel fiber = sphere_named(3, "f3", "");
        FibrationEntry e{"product:s3-s4", build_fibration(base, fiber, {fibration_total_shell(base, fiber).zero()}),
                         true, "product of spheres", Prop5Split{{0}, {}},
                         Prop5Split{{}, {0, 1}}};
        out.push_back(e);
    }
    {
        SullivanModel base = sphere_named(3, "b3", "");
        SullivanModel fiber = rename(make_cpn(2), {"f2", "f5"});
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"product:cp2-s3",
                         build_fibration(base, fiber, {shell.zero(), shell.zero()}), true,
                         "product of formal spaces", Prop5Split{{}, {0, 1}},
                         Prop5Split{{0}, {}}};
        out.push_back(e);
    }
    {
        SullivanModel base = sphere_named(5, "b5", "");
        SullivanModel fiber = rename(make_sphere(2), {"f2", "f3"});
        SullivanModel shell = fibration_total_shell(base, fiber);
        FibrationEntry e{"product:s2-s5",
                         build_fibration(base, fiber, {shell.zero(), shell.zero()}), true,
                         "product of spheres", Prop5Split{{}, {0, 1}}, Prop5Split{{0}, {}}};
        out.push_back(e);
    }
    return out;
}

std::optional<FibrationEntry> catalog_fibration(const std::string& key) {
    for (auto& e : catalog_fibrations())
        if (e.key == key) return e;
    return std::nullopt;
}

// ---------------------------------------------------------------- scaling

SullivanModel degree_scale(const SullivanModel& two_stage, unsigned i) {
    ClassPredicates cp = class_predicates(two_stage);
    if (!cp.is_two_stage) throw ModelError("degree_scale: model is not two-stage");

    // differential must be injective on stage 1
    if (!cp.w1.empty()) {
        std::vector<Monomial> all;
        std::map<Monomial, std::size_t> pos;
        std::vector<Polynomial> targets;
        for (std::size_t g : cp.w1) targets.push_back(two_stage.differential_of(g));
        for (const auto& t : targets)
            for (const auto& [mono, coef] : t.terms())
                if (!pos.count(mono)) {
                    pos[mono] = all.size();
                    all.push_back(mono);
                }
        QMatrix mat(all.size(), targets.size());
        for (std::size_t c = 0; c < targets.size(); ++c)
            for (const auto& [mono, coef] : targets[c].terms()) mat.at(pos[mono], c) = coef;
        if (rank_bareiss(mat) != targets.size())
            throw ModelError("degree_scale: differential is not injective on stage 1");
    }

    long long scale = 1;
    for (unsigned k = 0; k < i; ++k) scale = checked_mul(scale, 3);

    std::vector<bool> stage1(two_stage.generator_count(), false);
    for (std::size_t g : cp.w1) stage1[g] = true;

    std::vector<Generator> gens;
    for (const auto& g : two_stage.generators()) {
        long long deg;
        if (stage1[g.index]) {
            auto target_deg = two_stage.differential_of(g.index).homogeneous_degree();
            deg = checked_mul(scale, *target_deg) - 1;
        } else {
            deg = checked_mul(scale, g.degree);
        }
        gens.push_back(Generator{g.name, deg, g.index});
    }
    SullivanModel shell(gens, {});
    std::vector<Polynomial> diffs;
    for (std::size_t g = 0; g < two_stage.generator_count(); ++g) {
        Polynomial re = shell.zero();
        for (const auto& [mono, coef] : two_stage.differential_of(g).terms())
            re.add_term(shell.make_monomial(mono.exponents()), coef);
        diffs.push_back(re);
    }
    return SullivanModel(gens, diffs);
}

// ------------------------------------------------- pure-model bound

PureBoundResult pure_bound_and_fibration(const SullivanModel& pure_elliptic) {
    ClassPredicates cp = class_predicates(pure_elliptic);
    if (!cp.is_pure) throw ModelError("pure-model bound: model is not pure");
    EllipticInvariants inv = compute_invariants(pure_elliptic);

    BigInt two_pow = BigInt::pow(BigInt(2), static_cast<unsigned long>(inv.chi_pi));
    BigInt literal = two_pow, corrected = two_pow;

    std::vector<Generator> fiber_gens;
    std::vector<unsigned long> powers;
    std::vector<std::size_t> even_slots;
    for (const auto& g : pure_elliptic.generators()) {
        if (g.is_odd()) continue;
        long long a = g.degree;
        long long ceil_da = (inv.formal_dimension + a - 1) / a;
        literal *= BigInt(ceil_da);
        corrected *= BigInt(ceil_da + 1);
        long long vdeg = checked_mul(a, ceil_da + 1) - 1;
        fiber_gens.push_back(Generator{"aux_" + g.name, vdeg, fiber_gens.size()});
        powers.push_back(static_cast<unsigned long>(ceil_da + 1));
        even_slots.push_back(g.index);
    }

    SullivanModel fiber(fiber_gens, {});
    SullivanModel shell = fibration_total_shell(pure_elliptic, fiber);
    std::vector<Polynomial> perturbation;
    for (std::size_t k = 0; k < fiber_gens.size(); ++k)
        perturbation.push_back(shell.power(shell.generator_poly(even_slots[k]), powers[k]));
    return PureBoundResult{literal, corrected, inv.dim_h_total,
                        build_fibration(pure_elliptic, fiber, perturbation)};
}

// ---------------------------------------------------------------- random

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

long long Rng::in_range(long long lo, long long hi) {
    if (hi < lo) return lo;
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

namespace {

// Monomials of word length >= 2 in the stage-0 generators at a given degree.
std::vector<Monomial> decomposable_targets(const SullivanModel& shell,
                                           const std::vector<bool>& stage0,
                                           const std::vector<bool>& odd_allowed, long long degree) {
    std::vector<Monomial> out;
    for (const Monomial& m : shell.monomial_basis(degree)) {
        std::size_t word = 0;
        bool ok = true;
        for (std::size_t g = 0; g < shell.generator_count(); ++g) {
            if (!m.exponent(g)) continue;
            if (!stage0[g] || !odd_allowed[g]) {
                ok = false;
                break;
            }
            word += m.exponent(g);
        }
        if (ok && word >= 2) out.push_back(m);
    }
    return out;
}

}  // namespace

std::optional<RandomTwoStage> random_two_stage(std::uint64_t seed,
                                               const RandomTwoStageParams& params) {
    for (unsigned attempt = 0; attempt < params.retry_budget; ++attempt) {
        Rng rng(seed ^ ((attempt + 1) * 0x9E3779B97f4A7C15ULL));
        rng.next();

        std::size_t n = static_cast<std::size_t>(rng.below(params.n_even_max + 1));
        std::size_t m = static_cast<std::size_t>(rng.below(params.m_w0_max + 1));
        std::size_t r = static_cast<std::size_t>(rng.below(params.r_extra_max + 1));

        std::vector<std::pair<std::string, long long>> gen_spec;
        for (std::size_t k = 0; k < n; ++k)
            gen_spec.emplace_back("x" + std::to_string(k + 1),
                                  params.even_degrees[rng.below(params.even_degrees.size())]);
        for (std::size_t k = 0; k < m; ++k)
            gen_spec.emplace_back("u" + std::to_string(k + 1),
                                  params.odd_degrees[rng.below(params.odd_degrees.size())]);

        // stage-1 degrees are fixed once targets are chosen; build a shell
        // with only stage 0 first to enumerate targets
        SullivanModel stage0_shell = SullivanModel::build(gen_spec);
        std::vector<bool> all_stage0(stage0_shell.generator_count(), true);
        std::vector<bool> odd_ok(stage0_shell.generator_count(), true);
        if (params.pure_only)
            for (std::size_t g = 0; g < stage0_shell.generator_count(); ++g)
                odd_ok[g] = !stage0_shell.generator(g).is_odd();

        struct Stage1 {
            std::string name;
            Polynomial target;  // over stage0_shell
        };
        std::vector<Stage1> stage1;
        bool dead = false;

        for (std::size_t k = 0; k < n; ++k) {
            // x_k^p cuts the quotient; an occasional same-degree decomposable
            // cross term keeps the generator honest about verification
            unsigned long p =
                static_cast<unsigned long>(rng.in_range(params.power_min, params.power_max));
            Polynomial target = stage0_shell.power(stage0_shell.generator_poly(k), p);
            long long tdeg = *target.homogeneous_degree();
            if (rng.chance(1, 4)) {
                std::vector<Monomial> cands =
                    decomposable_targets(stage0_shell, all_stage0, odd_ok, tdeg);
                if (!cands.empty()) {
                    const Monomial& pick = cands[rng.below(cands.size())];
                    Rational c(rng.in_range(-2, 2));
                    if (!c.is_zero()) {
                        Polynomial alt = target + stage0_shell.monomial_poly(pick, c);
                        if (!alt.is_zero()) target = alt;
                    }
                }
            }
            stage1.push_back({"y" + std::to_string(k + 1), target});
        }
        for (std::size_t k = 0; k < r; ++k) {
            long long tdeg = 2 * rng.in_range(2, 5);  // even target degree
            std::vector<Monomial> cands =
                decomposable_targets(stage0_shell, all_stage0, odd_ok, tdeg);
            if (cands.empty()) {
                dead = true;
                break;
            }
            stage1.push_back({"z" + std::to_string(k + 1),
                              stage0_shell.monomial_poly(cands[rng.below(cands.size())],
                                                         Rational(1))});
        }
        if (dead) continue;

        std::vector<std::pair<std::string, long long>> full_spec = gen_spec;
        for (const auto& s : stage1) {
            long long deg = *s.target.homogeneous_degree() - 1;
            if (deg < 2) {
                dead = true;
                break;
            }
            full_spec.emplace_back(s.name, deg);
        }
        if (dead) continue;

        SullivanModel shell = SullivanModel::build(full_spec);
        std::vector<Polynomial> diffs(shell.generator_count(), shell.zero());
        for (std::size_t k = 0; k < stage1.size(); ++k) {
            Polynomial re = shell.zero();
            for (const auto& [mono, coef] : stage1[k].target.terms()) {
                std::vector<std::uint32_t> e(shell.generator_count(), 0);
                for (std::size_t g = 0; g < stage0_shell.generator_count(); ++g)
                    e[g] = mono.exponent(g);
                re.add_term(shell.make_monomial(e), coef);
            }
            diffs[gen_spec.size() + k] = re;
        }
        SullivanModel model(shell.generators(), diffs);

        if (!ellipticity_check(model).is_elliptic()) continue;
        return RandomTwoStage{model, n, m, r, attempt};
    }
    return std::nullopt;
}

}  // namespace hilali
