#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "segre/parser.hpp"

using namespace segre;
namespace st = segre::testing;

TEST_CASE("expression values") {
    VarSpace sp1{1};
    Series a = parseExpression("tau + 2*i*z*chi", sp1, 10);
    Series b = Series::variable(sp1, 10, sp1.tau());
    {
        Exponents e(sp1.dim(), 0);
        e[sp1.z(0)] = 1;
        e[sp1.chi(0)] = 1;
        b.addTerm(e, GaussianRational(2) * GaussianRational::i());
    }
    CHECK(a == b);

    // Precedence: ^ binds tighter than unary minus and *.
    CHECK(parseExpression("-z^2", sp1, 10) == -st::S("z").pow(2));
    CHECK(parseExpression("2*z^3", sp1, 10) == st::S("z*z*z") + st::S("z^3"));
    // Division by a unit is series inversion.
    CHECK(st::S("(1 - z) * (1 / (1 - z))") == st::S("1"));
    // Functions compose.
    CHECK(st::S("exp(log1p(z*chi + tau^2))") == st::S("1 + z*chi + tau^2"));
}

TEST_CASE("expression errors carry position information") {
    VarSpace sp2{2};
    try {
        parseExpression("tau + z1^", sp2, 10);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 9);
        CHECK(std::string(e.what()).find("integer exponent") !=
              std::string::npos);
    }
    try {
        parseExpression("1 / z1", sp2, 10);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unit denominator") !=
              std::string::npos);
    }
    try {
        parseExpression("tau + z3", sp2, 10);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.col == 7);
        CHECK(std::string(e.what()).find("z3") != std::string::npos);
    }
    CHECK_THROWS_AS(parseExpression("z +", sp2, 10), ParseError);
    CHECK_THROWS_AS(parseExpression("z) ", VarSpace{1}, 10), ParseError);
    CHECK_THROWS_AS(parseExpression("exp(1 + z)", VarSpace{1}, 10),
                    ParseError);
}

TEST_CASE("imw expressions use s and reject w/tau") {
    VarSpace sp1{1};
    Series phi = parseImwExpression("s * z * chi", sp1, 10);
    Exponents e(sp1.dim(), 0);
    e[sp1.z(0)] = 1;
    e[sp1.chi(0)] = 1;
    e[sp1.w()] = 1;
    Series expected(sp1, 10);
    expected.addTerm(e, GaussianRational(1));
    CHECK(phi == expected);
    CHECK_THROWS_AS(parseImwExpression("tau", sp1, 10), ParseError);
    CHECK_THROWS_AS(parseImwExpression("w", sp1, 10), ParseError);
}

TEST_CASE("file parsing") {
    const std::string text =
        "# sample input\n"
        "order 6;\n"
        "hypersurface M { n = 1; imw = z*chi; }\n"
        "hypersurface Mp { n = 1; Q = tau + 2*i*z*chi; }\n"
        "map H {\n"
        "  n = 1;\n"
        "  f = z; g = w;\n"
        "  ft = chi; gt = tau;\n"
        "}\n"
        "expect source.finite_type = proved;\n"
        "expect map.det_fz = 1;\n"
        "expect audit.dimension-one-equivalence.conclusion = proved;\n";
    ParsedFile pf = parseFile(text);
    CHECK(pf.order == 6);
    REQUIRE(pf.hypersurfaces.size() == 2);
    CHECK(pf.hypersurfaces[0].name == "M");
    CHECK(pf.hypersurfaces[0].imw.has_value());
    CHECK(pf.hypersurfaces[0].m.q() == st::S("tau + 2*i*z*chi", 1, 6));
    CHECK(pf.hypersurfaces[1].m.q() == pf.hypersurfaces[0].m.q());
    REQUIRE(pf.maps.size() == 1);
    CHECK(pf.maps[0].h.g() == st::S("w", 1, 6));
    REQUIRE(pf.expectations.size() == 3);
    CHECK(pf.expectations[0].key == "source.finite_type");
    CHECK(pf.expectations[0].value == "proved");
    CHECK(pf.expectations[1].value == "1");
    CHECK(pf.expectations[2].key ==
          "audit.dimension-one-equivalence.conclusion");

    // Override order wins over the directive.
    ParsedFile low = parseFile(text, 3);
    CHECK(low.order == 3);
    CHECK(low.hypersurfaces[0].m.q().order() == 3);
}

TEST_CASE("file parsing errors") {
    // order after a declaration
    CHECK_THROWS_AS(
        parseFile("hypersurface M { n = 1; Q = tau; }\norder 4;"),
        ParseError);
    // missing component
    CHECK_THROWS_AS(
        parseFile("map H { n = 2; f1 = z1; g = w; ft1 = chi1; ft2 = chi2; "
                  "gt = tau; }"),
        ParseError);
    // duplicate component
    CHECK_THROWS_AS(
        parseFile("map H { n = 1; f = z; f = 2*z; g = w; ft = chi; "
                  "gt = tau; }"),
        ParseError);
    // expect without terminator
    CHECK_THROWS_AS(parseFile("expect a.b = proved"), ParseError);
    // Q may not involve w (it is wrapped into a ParseError)
    CHECK_THROWS_AS(parseFile("hypersurface M { n = 1; Q = w; }"),
                    ParseError);
}

TEST_CASE("parse of printed form is the identity") {
    for (const char* text :
         {"tau + 2*i*z1*chi1", "z2 + z1*z2", "-z2",
          "tau^2 + 4*i*tau*z1*chi1 - 4*z1^2*chi1^2",
          "(1/2 + i)*z1 - 2/3*chi2^3*tau"}) {
        Series s = st::S(text, 2);
        CHECK(st::S(s.str(), 2) == s);
        CHECK(st::S(s.str(), 2).str() == s.str());
    }
}
