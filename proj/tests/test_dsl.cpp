#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilali/catalog.hpp"
#include "hilali/dsl.hpp"
#include "hilali/fibration.hpp"
#include "hilali/invariants.hpp"

using namespace hilali;

TEST_CASE("parse a CP3 document") {
    ParsedModel pm = parse_model(
        "model CP3\n"
        "gen x 2\n"
        "gen y 7\n"
        "d x = 0\n"
        "d y = x^4\n");
    CHECK(pm.name == "CP3");
    REQUIRE(pm.model.generator_count() == 2);
    EllipticInvariants inv = compute_invariants(pm.model);
    CHECK(inv.dim_h_total == 4);
    CHECK(inv.hilali == Rational(1, 2));
}

TEST_CASE("homogeneity is rejected with a line number") {
    try {
        parse_model("model bad\ngen x 2\ngen y 7\nd y = x^3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.semantic);
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("homogeneous") != std::string::npos);
    }
}

TEST_CASE("d^2 != 0 is rejected at parse time with the residue") {
    try {
        parse_model(
            "model bad\n"
            "gen x 2\n"
            "gen w 3\n"
            "gen y 5\n"
            "gen z 6\n"
            "d z = x^2*w\n"
            "d y = x^3 + z\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.semantic);
        CHECK(std::string(e.what()).find("d^2") != std::string::npos);
    }
}

TEST_CASE("rational coefficients and parentheses parse exactly") {
    ParsedModel pm = parse_model(
        "model coeffs\n"
        "gen x 2\n"
        "gen u 2\n"
        "gen z 3\n"
        "d z = 2*x^2 - 1/3*x*u\n");
    const Polynomial& dz = pm.model.differential_of(2);
    CHECK(dz.coefficient(pm.model.make_monomial({2, 0, 0})) == Rational(2));
    CHECK(dz.coefficient(pm.model.make_monomial({1, 1, 0})) == Rational(-1, 3));

    ParsedModel pm2 = parse_model(
        "model parens\n"
        "gen x 2\n"
        "gen u 2\n"
        "gen z 5\n"
        "d z = x*(x^2 - 2*u^2) + 1/2*u*(u^2 + x^2)\n");
    const Polynomial& dz2 = pm2.model.differential_of(2);
    CHECK(dz2.coefficient(pm2.model.make_monomial({3, 0, 0})) == Rational(1));
    CHECK(dz2.coefficient(pm2.model.make_monomial({1, 2, 0})) == Rational(-2));
    CHECK(dz2.coefficient(pm2.model.make_monomial({2, 1, 0})) == Rational(1, 2));
    CHECK(dz2.coefficient(pm2.model.make_monomial({0, 3, 0})) == Rational(1, 2));
}

TEST_CASE("syntax errors carry position and are not semantic") {
    try {
        parse_model("model m\ngen x 2\nd x = @\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK_FALSE(e.semantic);
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_model("model m\ngen x 1\n"), ParseError);
    CHECK_THROWS_AS(parse_model("gen x 2\n"), ParseError);                 // missing model line
    CHECK_THROWS_AS(parse_model("model m\ngen x 2\nd q = 0\n"), ParseError);  // undeclared
    CHECK_THROWS_AS(parse_model("model m\ngen x 2\ngen x 4\n"), ParseError);  // redeclared
}

TEST_CASE("print/parse round trip over the whole catalog") {
    for (const auto& e : catalog_models()) {
        INFO("model ", e.key);
        std::string doc = print_model(e.model, "roundtrip");
        ParsedModel back = parse_model(doc);
        REQUIRE(back.model.generator_count() == e.model.generator_count());
        for (std::size_t g = 0; g < e.model.generator_count(); ++g) {
            CHECK(back.model.generator(g).name == e.model.generator(g).name);
            CHECK(back.model.generator(g).degree == e.model.generator(g).degree);
            CHECK(back.model.differential_of(g).terms() ==
                  e.model.differential_of(g).terms());
        }
    }
}

TEST_CASE("perturbation documents build fibrations") {
    SullivanModel base = parse_model("model b\ngen b 4\ngen t 7\nd t = b^2\n").model;
    SullivanModel fiber = parse_model("model f\ngen f 3\n").model;
    SullivanModel shell = fibration_total_shell(base, fiber);
    auto pert = parse_perturbation("perturbation hopf\nd f = b\n", shell, 2);
    REQUIRE(pert.size() == 1);
    FibrationModel fm = build_fibration(base, fiber, pert);
    EllipticInvariants inv = compute_invariants(fm.total);
    CHECK(inv.dim_h_total == 2);
    CHECK(inv.formal_dimension == 7);

    // base generators may not be perturbed
    CHECK_THROWS_AS(parse_perturbation("d b = 0\n", shell, 2), ParseError);
    // unknown generators are flagged
    CHECK_THROWS_AS(parse_perturbation("d nope = b\n", shell, 2), ParseError);
}

TEST_CASE("polynomial printing is exact and parseable") {
    SullivanModel m = SullivanModel::build({{"x", 2}, {"u", 3}, {"v", 5}});
    Polynomial p = m.power(m.generator_poly(0), 3).scaled(Rational(-2, 3)) +
                   m.multiply(m.generator_poly(1), m.generator_poly(0)).scaled(Rational(1, 7)) +
                   m.generator_poly(2).scaled(Rational(5));
    std::string s = print_polynomial(p, m);
    Polynomial back = parse_polynomial(s, m);
    CHECK(back.terms() == p.terms());
    CHECK(print_polynomial(m.zero(), m) == "0");
}
