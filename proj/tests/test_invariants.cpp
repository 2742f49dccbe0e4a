#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilali/catalog.hpp"
#include "hilali/invariants.hpp"
#include "hilali/reduction.hpp"

using namespace hilali;

TEST_CASE("reduction: contractible pair cancels completely") {
    auto e = catalog_model("witness:contractible-pair");
    REQUIRE(e);
    LinearPartReduction red = linear_part_reduction(e->model);
    CHECK(red.minimal_part.generator_count() == 0);
    CHECK(red.pairs.size() == 1);
    CHECK(red.pairs[0].source_name == "x");
    CHECK(red.pairs[0].target_name == "y");
    CHECK(red.dim_pi_total() == 0);
}

TEST_CASE("reduction: hopf total model leaves one degree-7 generator") {
    auto e = catalog_model("witness:hopf-total");
    REQUIRE(e);
    LinearPartReduction red = linear_part_reduction(e->model);
    REQUIRE(red.minimal_part.generator_count() == 1);
    CHECK(red.minimal_part.generator(0).degree == 7);
    CHECK(red.minimal_part.differential_of(0).is_zero());
    CHECK(red.dim_pi_odd == 1);
    CHECK(red.dim_pi_even == 0);
}

TEST_CASE("reduction: linear part with several targets picks a basis change") {
    // d u = v + w: after replacing v by v + w the quotient leaves Lambda(w)
    SullivanModel shell = SullivanModel::build({{"u", 2}, {"v", 3}, {"w", 3}});
    SullivanModel m(shell.generators(),
                    {shell.generator_poly(1) + shell.generator_poly(2), shell.zero(),
                     shell.zero()});
    LinearPartReduction red = linear_part_reduction(m);
    REQUIRE(red.minimal_part.generator_count() == 1);
    CHECK(red.minimal_part.generator(0).degree == 3);
    CHECK(red.dim_pi_odd == 1);
    BettiTable t = betti_table(m, 5);
    CHECK(t.total == 2);
    CHECK(t.at(3) == 1);
}

TEST_CASE("reduction: cascading pairs through substituted differentials") {
    // d a = b, d c = e + a*b: eliminating (a, b) rewrites d c, then (c, e)
    // cancels too, leaving a point
    SullivanModel shell =
        SullivanModel::build({{"a", 2}, {"b", 3}, {"c", 4}, {"e", 5}});
    Polynomial dc = shell.generator_poly(3) +
                    shell.multiply(shell.generator_poly(0), shell.generator_poly(1));
    SullivanModel m(shell.generators(),
                    {shell.generator_poly(1), shell.zero(), dc, shell.zero()});
    REQUIRE(m.check_d_squared().ok);
    LinearPartReduction red = linear_part_reduction(m);
    CHECK(red.minimal_part.generator_count() == 0);
    CHECK(red.pairs.size() == 2);
    EllipticInvariants inv = compute_invariants(m);
    CHECK(inv.dim_h_total == 1);
    CHECK(inv.formal_dimension == 0);
}

TEST_CASE("reduction: minimal models are untouched") {
    for (const char* key : {"cpn:3", "sphere:6", "star:2,3,5", "wallach:w6"}) {
        auto e = catalog_model(key);
        REQUIRE(e);
        LinearPartReduction red = linear_part_reduction(e->model);
        CHECK(red.pairs.empty());
        CHECK(red.minimal_part.generator_count() == e->model.generator_count());
    }
}

TEST_CASE("reduction transports the differential correctly (twistor total is CP3)") {
    auto f = catalog_fibration("twistor:cp3");
    REQUIRE(f);
    LinearPartReduction red = linear_part_reduction(f->fibration.total);
    REQUIRE(red.minimal_part.generator_count() == 2);
    // Lambda(x2, y7; dy = c x^4), generators in original order (b7 then f2)
    const SullivanModel& mp = red.minimal_part;
    std::size_t odd7 = mp.generator(0).degree == 7 ? 0 : 1;
    std::size_t even2 = 1 - odd7;
    CHECK(mp.generator(odd7).degree == 7);
    CHECK(mp.generator(even2).degree == 2);
    Polynomial dy = mp.differential_of(odd7);
    REQUIRE(dy.term_count() == 1);
    CHECK(*dy.homogeneous_degree() == 8);
    std::vector<std::uint32_t> x4(2, 0);
    x4[even2] = 4;
    CHECK_FALSE(dy.coefficient(mp.make_monomial(x4)).is_zero());
    EllipticInvariants inv = compute_invariants(f->fibration.total);
    CHECK(inv.dim_h_total == 4);
    CHECK(inv.formal_dimension == 6);
}

TEST_CASE("ellipticity decisions") {
    for (const char* key : {"sphere:7", "sphere:4", "cpn:3", "hpn:2", "star:2,2,7",
                            "wallach:w6", "product:s3xs5", "witness:hopf-total",
                            "witness:contractible-pair", "witness:two-stage-nonpure"}) {
        auto e = catalog_model(key);
        REQUIRE(e);
        CHECK(ellipticity_check(e->model).status == Ellipticity::elliptic);
    }
    auto hyp = catalog_model("witness:hyperbolic");
    REQUIRE(hyp);
    CHECK(ellipticity_check(hyp->model).status == Ellipticity::not_elliptic);

    // an insufficient user cap is reported, never silently false
    auto cp5 = catalog_model("cpn:5");
    REQUIRE(cp5);
    EllipticityResult undecided = ellipticity_check(cp5->model, 3);
    CHECK(undecided.status == Ellipticity::undecided_at_cap);
    CHECK(ellipticity_check(cp5->model).status == Ellipticity::elliptic);
}

TEST_CASE("catalog ground truth matches computed invariants exactly") {
    for (const auto& e : catalog_models()) {
        if (!e.known) continue;
        INFO("model ", e.key);
        EllipticInvariants inv = compute_invariants(e.model);
        CHECK(inv.dim_pi_even == e.known->dim_pi_even);
        CHECK(inv.dim_pi_odd == e.known->dim_pi_odd);
        CHECK(inv.dim_h_total == e.known->dim_h);
        CHECK(inv.formal_dimension == e.known->formal_dimension);
        CHECK(inv.chi == e.known->chi);
        CHECK(inv.chi_pi == e.known->chi_pi);
        if (e.known->dim_h != 0) CHECK(inv.hilali == e.known->hilali);
    }
}

TEST_CASE("dimension formula equals the computed top degree") {
    for (const auto& e : catalog_models()) {
        if (!e.known) continue;
        EllipticInvariants inv = compute_invariants(e.model);
        CHECK(inv.betti.formal_dimension == inv.formal_dimension);
        if (inv.dim_h_total > 1) CHECK(inv.betti.at(inv.formal_dimension) == 1);
        // beyond the top everything vanishes (checked a little past the cap)
        BettiTable beyond = betti_table(e.model, inv.formal_dimension + 3);
        CHECK(beyond.formal_dimension == inv.formal_dimension);
        CHECK(beyond.status == BettiStatus::complete);
    }
}

TEST_CASE("the naive exponent formula overshoots by exactly 2 on the even-bottom pair") {
    auto e = catalog_model("witness:contractible-pair");
    REQUIRE(e);
    // applying the exponent formula to the unreduced generator list
    Exponents naive = exponents_of(e->model);
    long long naive_dim = naive.dimension_formula();
    EllipticInvariants inv = compute_invariants(e->model);
    CHECK(naive_dim == inv.formal_dimension + 2);
    CHECK(inv.formal_dimension == 0);
}

TEST_CASE("F0 detection and the cohomology-dimension formula") {
    for (const auto& e : catalog_models()) {
        if (!e.known) continue;
        EllipticInvariants inv = compute_invariants(e.model);
        F0Check f0 = f0_check_and_formula(inv);
        CHECK(f0.is_f0 == (inv.chi > 0));
        CHECK(f0.is_f0 == (inv.dim_pi_even == inv.dim_pi_odd));
        if (f0.is_f0) {
            REQUIRE(f0.predicted_dim_h);
            CHECK(*f0.predicted_dim_h ==
                  Rational(static_cast<long long>(inv.dim_h_total)));
            // even concentration
            for (const auto& [k, b] : inv.betti.betti) CHECK(k % 2 == 0);
        }
    }
}

TEST_CASE("chi_pi >= 0 and odd dominates even for every elliptic catalog model") {
    for (const auto& e : catalog_models()) {
        if (!e.known) continue;
        EllipticInvariants inv = compute_invariants(e.model);
        CHECK(inv.chi_pi >= 0);
        CHECK(inv.dim_pi_odd >= inv.dim_pi_even);
    }
}

TEST_CASE("class predicates") {
    auto check = [](const char* key, bool pure, bool two_stage) {
        auto e = catalog_model(key);
        REQUIRE(e);
        ClassPredicates cp = class_predicates(e->model);
        INFO("model ", key);
        CHECK(cp.is_pure == pure);
        CHECK(cp.is_two_stage == two_stage);
    };
    check("cpn:3", true, true);           // W0 empty
    check("product:s3xs5", true, true);   // W0 = all odd generators
    check("witness:two-stage-nonpure", false, true);
    check("wallach:w6", true, true);

    auto cp3 = catalog_model("cpn:3");
    ClassPredicates cp = class_predicates(cp3->model);
    CHECK(cp.w0.empty());
    CHECK(cp.w1.size() == 1);

    auto prod = catalog_model("product:s3xs5");
    cp = class_predicates(prod->model);
    CHECK(cp.w0.size() == 2);
    CHECK(cp.w1.empty());

    // non-minimal input is rejected
    auto hopf = catalog_model("witness:hopf-total");
    CHECK_THROWS_AS(class_predicates(hopf->model), ModelError);
}

TEST_CASE("star type detection") {
    auto star = catalog_model("star:2,3,5");
    REQUIRE(star);
    CHECK(star_type_check(star->model));
    CHECK(star_type_check(catalog_model("aloff-wallach:w7")->model));
    CHECK_FALSE(star_type_check(make_sphere(7)));
    CHECK_FALSE(star_type_check(make_cpn(3)));
    // a degree-consistent tall example: dz = x^5 with deg z = 9
    SullivanModel m = make_star_type(2, 5, 7);
    CHECK(star_type_check(m));
}

TEST_CASE("invariants refuses non-elliptic input") {
    auto hyp = catalog_model("witness:hyperbolic");
    REQUIRE(hyp);
    CHECK_THROWS_AS(compute_invariants(hyp->model), ModelError);
}

TEST_CASE("point model invariants") {
    SullivanModel point = SullivanModel::build({});
    EllipticInvariants inv = compute_invariants(point);
    CHECK(inv.dim_pi_total() == 0);
    CHECK(inv.dim_h_total == 1);
    CHECK(inv.hilali == Rational(0));
    CHECK(inv.formal_dimension == 0);
}
