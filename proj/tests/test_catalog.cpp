#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilali/catalog.hpp"
#include "hilali/invariants.hpp"

using namespace hilali;

TEST_CASE("constructors enforce their degree preconditions") {
    CHECK_THROWS_AS(make_cpn(0), ModelError);
    CHECK_THROWS_AS(make_hpn(0), ModelError);
    CHECK_THROWS_AS(make_star_type(3, 2, 5), ModelError);   // odd "even" degree
    CHECK_THROWS_AS(make_star_type(2, 1, 5), ModelError);   // p = 1 is a contractible pair
    CHECK_THROWS_AS(make_star_type(2, 2, 4), ModelError);   // even extra degree
}

TEST_CASE("star models: worked examples") {
    EllipticInvariants a = compute_invariants(make_star_type(2, 2, 7));
    CHECK(a.dim_h_total == 4);
    CHECK(a.hilali == Rational(3, 4));
    EllipticInvariants b = compute_invariants(make_star_type(2, 3, 5));
    CHECK(b.dim_h_total == 6);
    CHECK(b.hilali == Rational(1, 2));
}

TEST_CASE("catalog has enough closed-form entries and they are self-consistent") {
    std::size_t with_known = 0;
    for (const auto& e : catalog_models())
        if (e.known) ++with_known;
    CHECK(with_known >= 15);
}

TEST_CASE("degree scaling preserves h and homotopy, scales the formal dimension") {
    for (const char* key : {"cpn:2", "cpn:3", "product:s3xs5", "star:2,2,7", "hpn:2"}) {
        auto e = catalog_model(key);
        REQUIRE(e);
        EllipticInvariants base = compute_invariants(e->model);
        long long scale = 1;
        for (unsigned i = 1; i <= 4; ++i) {
            scale *= 3;
            SullivanModel scaled = degree_scale(e->model, i);
            EllipticInvariants inv = compute_invariants(scaled);
            INFO("model ", key, " i=", i);
            CHECK(inv.hilali == base.hilali);
            CHECK(inv.dim_pi_even == base.dim_pi_even);
            CHECK(inv.dim_pi_odd == base.dim_pi_odd);
            CHECK(inv.dim_h_total == base.dim_h_total);
            CHECK(inv.formal_dimension == scale * base.formal_dimension);
            // parity is preserved generator by generator
            for (std::size_t g = 0; g < scaled.generator_count(); ++g)
                CHECK(scaled.generator(g).is_odd() == e->model.generator(g).is_odd());
        }
    }
}

TEST_CASE("degree scaling preserves h on every two-stage catalog entry") {
    for (const auto& e : catalog_models()) {
        if (!e.two_stage || !e.known) continue;
        INFO("model ", e.key);
        EllipticInvariants base = compute_invariants(e.model);
        for (unsigned i : {1u, 4u}) {
            SullivanModel scaled = degree_scale(e.model, i);
            EllipticInvariants inv = compute_invariants(scaled);
            CHECK(inv.hilali == base.hilali);
            CHECK(inv.dim_pi_even == base.dim_pi_even);
            CHECK(inv.dim_pi_odd == base.dim_pi_odd);
        }
    }
}

TEST_CASE("degree scaling with i = 0 is the identity") {
    auto e = catalog_model("cpn:2");
    REQUIRE(e);
    SullivanModel scaled = degree_scale(e->model, 0);
    REQUIRE(scaled.generator_count() == e->model.generator_count());
    for (std::size_t g = 0; g < scaled.generator_count(); ++g) {
        CHECK(scaled.generator(g).degree == e->model.generator(g).degree);
        CHECK(scaled.generator(g).name == e->model.generator(g).name);
        CHECK(scaled.differential_of(g).terms() == e->model.differential_of(g).terms());
    }
}

TEST_CASE("degree scaling rejects bad inputs") {
    auto hopf = catalog_model("witness:hopf-total");
    REQUIRE(hopf);
    CHECK_THROWS_AS(degree_scale(hopf->model, 1), ModelError);  // not minimal

    // differential not injective on stage 1: two generators with one target
    SullivanModel shell = SullivanModel::build({{"x", 2}, {"y", 3}, {"z", 3}});
    Polynomial x2 = shell.power(shell.generator_poly(0), 2);
    SullivanModel dup(shell.generators(), {shell.zero(), x2, x2});
    CHECK_THROWS_AS(degree_scale(dup, 1), ModelError);
}

TEST_CASE("worked scaling example: CP2") {
    auto e = catalog_model("cpn:2");
    REQUIRE(e);
    SullivanModel scaled = degree_scale(e->model, 1);
    CHECK(scaled.generator(0).degree == 6);       // 3 * 2
    CHECK(scaled.generator(1).degree == 17);      // 3 * deg(d y) - 1 = 3*6 - 1
    EllipticInvariants inv = compute_invariants(scaled);
    CHECK(inv.hilali == Rational(2, 3));

    auto prod = catalog_model("product:s3xs5");
    SullivanModel sp = degree_scale(prod->model, 2);
    CHECK(sp.generator(0).degree == 27);
    CHECK(sp.generator(1).degree == 45);
}

TEST_CASE("pure-model bound: corrected holds, literal fails on CP^n") {
    for (long long n = 1; n <= 5; ++n) {
        PureBoundResult res = pure_bound_and_fibration(make_cpn(n));
        CHECK(res.dim_h == static_cast<std::size_t>(n + 1));
        CHECK(res.literal_bound == BigInt(n));          // documented discrepancy: n < n+1
        CHECK(res.corrected_bound == BigInt(n + 1));    // holds with equality
        CHECK(res.literal_bound < BigInt(static_cast<long long>(res.dim_h)));
        CHECK(res.corrected_bound >= BigInt(static_cast<long long>(res.dim_h)));
    }

    PureBoundResult s6 = pure_bound_and_fibration(make_sphere(6));
    CHECK(s6.corrected_bound == BigInt(2));
    CHECK(s6.dim_h == 2);

    PureBoundResult odd2 = pure_bound_and_fibration(make_product({make_sphere(3), make_sphere(5)}));
    CHECK(odd2.corrected_bound == BigInt(4));  // 2^2 * empty product
    CHECK(odd2.dim_h == 4);

    // the auxiliary fibration is a valid relative model with the right fiber degrees
    PureBoundResult cp2 = pure_bound_and_fibration(make_cpn(2));
    REQUIRE(cp2.auxiliary.fiber.generator_count() == 1);
    CHECK(cp2.auxiliary.fiber.generator(0).degree == 2 * (2 + 1) - 1);  // a(ceil+1)-1 = 5
    CHECK(cp2.auxiliary.total.check_d_squared().ok);
}

TEST_CASE("pure-model bound on every pure elliptic catalog model") {
    for (const auto& e : catalog_models()) {
        if (!e.pure || !e.known) continue;
        INFO("model ", e.key);
        PureBoundResult res = pure_bound_and_fibration(e.model);
        CHECK(res.corrected_bound >= BigInt(static_cast<long long>(res.dim_h)));
    }
}

TEST_CASE("pure-model bound rejects non-pure input") {
    auto np = catalog_model("witness:two-stage-nonpure");
    REQUIRE(np);
    CHECK_THROWS_AS(pure_bound_and_fibration(np->model), ModelError);
}

TEST_CASE("random two-stage generation is reproducible and elliptic") {
    RandomTwoStageParams params;
    auto a = random_two_stage(42, params);
    auto b = random_two_stage(42, params);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->n == b->n);
    CHECK(a->m == b->m);
    CHECK(a->r == b->r);
    REQUIRE(a->model.generator_count() == b->model.generator_count());
    for (std::size_t g = 0; g < a->model.generator_count(); ++g) {
        CHECK(a->model.generator(g).name == b->model.generator(g).name);
        CHECK(a->model.generator(g).degree == b->model.generator(g).degree);
        CHECK(a->model.differential_of(g).terms() == b->model.differential_of(g).terms());
    }

    int elliptic_count = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto s = random_two_stage(seed, params);
        if (!s) continue;
        ++elliptic_count;
        CHECK(ellipticity_check(s->model).is_elliptic());
        CHECK(s->model.check_d_squared().ok);
        ClassPredicates cp = class_predicates(s->model);
        CHECK(cp.is_two_stage);
        CHECK(cp.w0.size() == s->m);
        CHECK(cp.w1.size() == s->n + s->r);
    }
    CHECK(elliptic_count >= 55);  // the budget almost always suffices
}

TEST_CASE("random samples with stage dims (0,1,0) are odd spheres") {
    RandomTwoStageParams params;
    bool seen = false;
    for (std::uint64_t seed = 0; seed < 200 && !seen; ++seed) {
        auto s = random_two_stage(seed, params);
        if (!s || !(s->n == 0 && s->m == 1 && s->r == 0)) continue;
        seen = true;
        REQUIRE(s->model.generator_count() == 1);
        CHECK(s->model.generator(0).is_odd());
        CHECK(s->model.differential_of(0).is_zero());
        CHECK(compute_invariants(s->model).hilali == Rational(1, 2));
    }
    CHECK(seen);
}

TEST_CASE("random pure generation stays pure") {
    RandomTwoStageParams params;
    params.pure_only = true;
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        auto s = random_two_stage(seed, params);
        if (!s) continue;
        ClassPredicates cp = class_predicates(s->model);
        CHECK(cp.is_pure);
    }
}
