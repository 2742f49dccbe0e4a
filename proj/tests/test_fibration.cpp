#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilali/catalog.hpp"
#include "hilali/cohomology.hpp"
#include "hilali/fibration.hpp"

using namespace hilali;

namespace {

FibrationReport report_for(const char* key) {
    auto e = catalog_fibration(key);
    REQUIRE(e);
    return analyze_fibration(e->fibration, e->formal_all, e->fiber_split, e->base_split);
}

Rational slack(const FibrationReport& rep, const char* name) {
    const CheckItem* it = rep.find(name);
    REQUIRE(it);
    return it->slack;
}

}  // namespace

TEST_CASE("build validation rejects bad perturbations") {
    SullivanModel base = make_cpn(2);  // x, y
    SullivanModel fiber = SullivanModel::build({{"f", 3}});
    SullivanModel shell = fibration_total_shell(base, fiber);

    // valid: d f = x^2
    CHECK_NOTHROW(build_fibration(base, fiber, {shell.power(shell.generator_poly(0), 2)}));

    // invalid: perturbation without base generators
    CHECK_THROWS_AS(build_fibration(base, fiber, {shell.power(shell.generator_poly(2), 1)}),
                    ModelError);

    // invalid: d^2 != 0 (d f = y picks up d y = x^3 under d)
    CHECK_THROWS_AS(build_fibration(base, fiber, {shell.generator_poly(1)}), ModelError);

    // duplicate generator names across base and fiber
    SullivanModel clash = SullivanModel::build({{"x", 3}});
    CHECK_THROWS_AS(fibration_total_shell(base, clash), ModelError);
}

TEST_CASE("product fibration is valid and pi-trivial") {
    auto rep = report_for("product:s3-s4");
    CHECK(rep.pi_trivial);
    CHECK(rep.tnhz);
    CHECK(rep.contracted_pairs == 0);
    CHECK(rep.all_asserted_hold());
    // h(X) = h(F x B) at the product
    CHECK(rep.total.hilali == rep.h_product);
    // summed inequality has slack 4: 3 + 2*2 = 7 >= 1 + 2
    CHECK(slack(rep, "contraction_sum_bound") == Rational(4));
    // Kuenneth: dim H(X) = dim H(F) dim H(B) exactly
    CHECK(slack(rep, "serre_bound") == Rational(0));
    // both implied inequalities applicable and holding
    const CheckItem* tn = rep.find("tnhz_implies_h_sum");
    REQUIRE(tn);
    CHECK(tn->applicable);
    CHECK(tn->holds);
    const CheckItem* pt = rep.find("pi_trivial_implies_product_bound");
    REQUIRE(pt);
    CHECK(pt->applicable);
    CHECK(pt->holds);
}

TEST_CASE("hopf fibration S3 -> S7 -> S4") {
    auto e = catalog_fibration("hopf:s3-s7-s4");
    REQUIRE(e);
    TransgressionAnalysis tr = transgression_analysis(e->fibration);
    CHECK(tr.contracted_pairs.size() == 1);
    CHECK(tr.contracted_pairs[0].source_name == "f3");
    CHECK(tr.contracted_pairs[0].target_name == "b4");
    CHECK(tr.c_fiber_odd == 1);
    CHECK(tr.dim_pi_x() == 1);

    auto rep = report_for("hopf:s3-s7-s4");
    CHECK(rep.total.dim_pi_total() == 1);
    CHECK(rep.total.dim_h_total == 2);
    CHECK(rep.total.hilali == Rational(1, 2));
    CHECK(rep.fiber.hilali == Rational(1, 2));
    CHECK(rep.base.hilali == Rational(1));
    CHECK(rep.h_product == Rational(3, 4));

    // sharp summed inequality: slack exactly zero
    CHECK(slack(rep, "contraction_sum_bound") == Rational(0));

    // conjecture left: 3/8 <= 1/2, slack 1/8
    CHECK(slack(rep, "conjecture_left") == Rational(1, 8));
    // conjecture right: 1/2 < 7/4, slack 5/4
    CHECK(slack(rep, "conjecture_right") == Rational(5, 4));
    // 3h bound: 3/4 <= 3*(1/2), slack 3/4
    CHECK(slack(rep, "three_h_bound") == Rational(3, 4));

    // the halving ingredient fails on hopf with exactly 2 < 3, and is a
    // diagnostic here because the fiber is an odd sphere
    const CheckItem* ing = rep.find("two_pi_x_ge_pi_f_plus_pi_b");
    REQUIRE(ing);
    CHECK_FALSE(ing->asserted);
    CHECK_FALSE(ing->holds);
    CHECK(ing->slack == Rational(-1));

    // dim H(X) <= dim H(F) dim H(B): 2 <= 4
    CHECK(slack(rep, "serre_bound") == Rational(2));

    // neither flag
    CHECK_FALSE(rep.tnhz);
    CHECK_FALSE(rep.pi_trivial);

    // halving bound with c = 1: dim H(X) = 2 equals 4/2
    REQUIRE(rep.has_splits);
    CHECK(rep.c_tf == 1);
    CHECK(slack(rep, "halving_bound") == Rational(0));

    // the lower-bound diagnostic is violated: 2 < 4, recorded without failing the run
    const CheckItem* diag = rep.find("dim_h_lower_bound_diagnostic");
    REQUIRE(diag);
    CHECK_FALSE(diag->asserted);
    CHECK_FALSE(diag->holds);
    CHECK(diag->slack == Rational(-2));
    CHECK(rep.all_asserted_hold());
}

TEST_CASE("restriction to fiber: hopf is not TNHZ, twistor is") {
    auto hopf = catalog_fibration("hopf:s3-s7-s4");
    REQUIRE(hopf);
    FiberRestriction r =
        restriction_to_fiber(hopf->fibration.total, hopf->fibration.base_gen_count,
                             hopf->fibration.fiber, 3);
    CHECK_FALSE(r.surjective);
    REQUIRE(r.failing_degrees.size() == 1);
    CHECK(r.failing_degrees[0] == 3);  // H^3(S7) = 0 cannot surject onto H^3(S3)

    auto tw = catalog_fibration("twistor:cp3");
    REQUIRE(tw);
    FiberRestriction rt = restriction_to_fiber(tw->fibration.total, tw->fibration.base_gen_count,
                                               tw->fibration.fiber, 2);
    CHECK(rt.surjective);
}

TEST_CASE("twistor CP3 report") {
    auto rep = report_for("twistor:cp3");
    CHECK(rep.total.dim_h_total == 4);
    CHECK(rep.total.hilali == Rational(1, 2));
    CHECK(rep.h_product == Rational(1));
    CHECK(rep.tnhz);
    CHECK_FALSE(rep.pi_trivial);
    CHECK(rep.contracted_pairs == 1);

    // 2h bound for F0 fibers: h(F x B) = 1 <= 2 h(X) = 1, equality
    const CheckItem* thc = rep.find("two_h_bound_f0_fiber");
    REQUIRE(thc);
    CHECK(thc->applicable);
    CHECK(thc->asserted);
    CHECK(thc->slack == Rational(0));

    // tnhz implied: 1/2 <= 1 + 1
    const CheckItem* tn = rep.find("tnhz_implies_h_sum");
    REQUIRE(tn);
    CHECK(tn->applicable);
    CHECK(tn->holds);
    CHECK(tn->slack == Rational(3, 2));

    // c = 0 here: the fiber's odd-sphere part is empty
    REQUIRE(rep.has_splits);
    CHECK(rep.c_tf == 0);
    CHECK(slack(rep, "halving_bound") == Rational(0));  // 4 = 4/1
    CHECK(rep.all_asserted_hold());
}

TEST_CASE("S3 over CP2: pi-trivial but not TNHZ") {
    auto rep = report_for("hopf:s3-over-cp2");
    CHECK(rep.pi_trivial);
    CHECK_FALSE(rep.tnhz);
    CHECK(rep.contracted_pairs == 0);
    CHECK(rep.total.dim_pi_total() == 3);
    CHECK(rep.total.dim_pi_odd == 2);
    CHECK(rep.total.dim_h_total == 4);
    CHECK(rep.total.hilali == Rational(3, 4));
    // pi-trivial implied bound: h(F x B) = 3/6 <= 3/4
    const CheckItem* pt = rep.find("pi_trivial_implies_product_bound");
    REQUIRE(pt);
    CHECK(pt->applicable);
    CHECK(pt->holds);
    CHECK(rep.all_asserted_hold());
}

TEST_CASE("higher hopf fibrations") {
    for (const char* key : {"hopf:s7-s15-s8", "hopf:s3-s11-hp2"}) {
        auto rep = report_for(key);
        INFO("fibration ", key);
        CHECK(rep.total.dim_pi_total() == 1);
        CHECK(rep.contracted_pairs == 1);
        CHECK(slack(rep, "contraction_sum_bound") == Rational(0));  // sharp here too
        CHECK(rep.all_asserted_hold());
    }
}

TEST_CASE("every catalog fibration passes its asserted report") {
    for (const auto& e : catalog_fibrations()) {
        INFO("fibration ", e.key);
        FibrationReport rep =
            analyze_fibration(e.fibration, e.formal_all, e.fiber_split, e.base_split);
        CHECK(rep.all_asserted_hold());
        // structural cross-checks that hold for every elliptic fibration
        CHECK(rep.total.formal_dimension ==
              rep.fiber.formal_dimension + rep.base.formal_dimension);
        CHECK(rep.total.chi_pi == rep.fiber.chi_pi + rep.base.chi_pi);
        CHECK(rep.total.dim_pi_total() ==
              rep.fiber.dim_pi_total() + rep.base.dim_pi_total() - 2 * rep.contracted_pairs);
    }
}

TEST_CASE("transgression agrees with reduction on every catalog fibration") {
    for (const auto& e : catalog_fibrations()) {
        TransgressionAnalysis tr = transgression_analysis(e.fibration);
        LinearPartReduction red = linear_part_reduction(e.fibration.total);
        CHECK(tr.dim_pi_even_x == red.dim_pi_even);
        CHECK(tr.dim_pi_odd_x == red.dim_pi_odd);
        CHECK(tr.contracted_pairs.size() == red.pairs.size());
        CHECK(tr.pairs_all_fiber_odd_to_base_even);
    }
}

TEST_CASE("halving-bound decomposition validation rejects nonsense") {
    auto e = catalog_fibration("hopf:s3-s7-s4");
    REQUIRE(e);
    // T must be closed odd generators: the base's even generator is not
    Prop5Split bad_fiber{{0}, {}};
    Prop5Split bad_base{{0}, {1}};
    CHECK_THROWS_AS(analyze_fibration(e->fibration, true, bad_fiber, bad_base), ModelError);
    // incomplete cover
    Prop5Split incomplete{{}, {}};
    CHECK_THROWS_AS(analyze_fibration(e->fibration, true, incomplete, e->base_split), ModelError);
}
