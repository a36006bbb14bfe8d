#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotcalc/errors.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/reduce.hpp"

using namespace knotcalc;

TEST_CASE("parser accepts the grammar") {
    CHECK(parse_knot("U").kind == KnotExpr::Kind::Unknot);

    KnotExpr t = parse_knot(" T( 2 , 5 ) ");
    CHECK(t.kind == KnotExpr::Kind::Torus);
    CHECK(t.p == 2);
    CHECK(t.q == 5);

    KnotExpr m = parse_knot("2*T(2,3)");
    CHECK(m.kind == KnotExpr::Kind::Multiple);
    CHECK(m.multiple == 2);
    CHECK(m.children[0].kind == KnotExpr::Kind::Torus);

    KnotExpr main_knot = parse_knot("T(2,5) # -T(4,5) # C(2,5;T(2,3))");
    REQUIRE(main_knot.kind == KnotExpr::Kind::Sum);
    REQUIRE(main_knot.children.size() == 3);
    CHECK(main_knot.children[1].kind == KnotExpr::Kind::Mirror);
    CHECK(main_knot.children[2].kind == KnotExpr::Kind::Cable);
    CHECK(main_knot.children[2].children[0].kind == KnotExpr::Kind::Torus);

    // Unary minus binds tighter than #: -(T # T) needs parentheses.
    KnotExpr mixed = parse_knot("-T(2,3) # T(2,5)");
    REQUIRE(mixed.kind == KnotExpr::Kind::Sum);
    CHECK(mixed.children[0].kind == KnotExpr::Kind::Mirror);
    CHECK(parse_knot("-(T(2,3) # T(2,5))").kind == KnotExpr::Kind::Mirror);

    CHECK(parse_knot("3*2*U").children[0].multiple == 2);
    CHECK(parse_knot("C(2,5; T(2,3) # U)").children[0].kind == KnotExpr::Kind::Sum);
}

TEST_CASE("parser reports positions") {
    for (const char* bad : {"", "T(2,5", "T(2 5)", "K(2,3)", "T(2,5) #", "2T(2,3)",
                            "T(2,5) junk", "--T(2,3)", "T(,5)"}) {
        CHECK_THROWS_AS(parse_knot(bad), ParseError);
    }
    try {
        parse_knot("T(2,5) @ U");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("expression round trip through to_string") {
    for (const char* text : {"U", "T(2,5)", "C(2,5;T(2,3))", "T(2,5) # -T(4,5) # C(2,5;T(2,3))",
                             "2*T(2,3)", "-(T(2,3) # U)"}) {
        KnotExpr e = parse_knot(text);
        CHECK(parse_knot(e.to_string()).to_string() == e.to_string());
    }
}

TEST_CASE("alexander of expressions") {
    CHECK(alexander(parse_knot("U")) == LaurentPoly::one());
    CHECK(alexander(parse_knot("T(2,3)")) == torus_alexander(2, 3));
    CHECK(alexander(parse_knot("-T(2,3)")) == torus_alexander(2, 3));
    CHECK(alexander(parse_knot("T(2,3) # T(2,5)")) ==
          torus_alexander(2, 3) * torus_alexander(2, 5));
    CHECK(alexander(parse_knot("2*T(2,3)")) == torus_alexander(2, 3) * torus_alexander(2, 3));
    CHECK(alexander(parse_knot("C(2,5;T(2,3))")) ==
          cable_alexander(2, 5, torus_alexander(2, 3)));
}

TEST_CASE("build sizes and structure") {
    CHECK(build(parse_knot("U")).size() == 1);
    CHECK(build(parse_knot("T(4,5)")).size() == 7);
    CHECK(build(parse_knot("C(2,5;T(2,3))")).size() == 5);
    BifilteredComplex full = build(parse_knot("T(2,5) # -T(4,5) # C(2,5;T(2,3))"));
    CHECK(full.size() == 175);
    CHECK(full.validate().ok());
    CHECK(check_global_homology(full).kind == GlobalHomology::Kind::RankOne);
    CHECK(check_global_homology(full).grading == 0);
}

TEST_CASE("build respects mirrors and unknot sums") {
    KnotExpr e = parse_knot("T(2,5)");
    CHECK(build(KnotExpr::mirror(e)) == BifilteredComplex::dual(build(e)));
    CHECK(build(parse_knot("T(2,5) # U")).isomorphic_by_order(build(e)));
    CHECK(build(KnotExpr::times(-1, e)) == BifilteredComplex::dual(build(e)));
    CHECK(build(KnotExpr::times(0, e)).size() == 1);
}

TEST_CASE("build gates non-staircase atoms") {
    // T(2,4) is not even a knot; the torus gate fires first.
    CHECK_THROWS_AS(build(parse_knot("T(2,4)")), ArgumentError);
    // A connected-sum companion fails the alternating-coefficient gate,
    // and the error names it.
    try {
        build(parse_knot("C(2,3;T(2,3) # T(2,3))"));
        FAIL("expected ArgumentError");
    } catch (const ArgumentError& e) {
        CHECK(std::string(e.what()).find("T(2,3) # T(2,3)") != std::string::npos);
    }
}

TEST_CASE("reduced model matches the full build") {
    for (const char* text :
         {"T(2,3) # T(2,5)", "T(4,5) # -C(2,5;T(2,3))", "2*T(2,3)", "-T(3,4) # T(3,4)"}) {
        KnotExpr e = parse_knot(text);
        BifilteredComplex full = build(e);
        BifilteredComplex reduced = build_reduced_model(e);
        CHECK(reduced.size() <= full.size());
        CHECK(reduced.validate().ok());
        CHECK(tau(reduced) == tau(full));
        CHECK(epsilon(reduced) == epsilon(full));
    }
    BifilteredComplex small = build_reduced_model(parse_knot("T(4,5) # -C(2,5;T(2,3))"));
    CHECK(small.size() == 3);
}

TEST_CASE("upsilon_knot additivity") {
    KnotExpr t25 = parse_knot("T(2,5)");
    KnotExpr t45 = parse_knot("T(4,5)");
    CHECK(upsilon_knot(parse_knot("U")).is_zero());
    CHECK(upsilon_knot(t25) == upsilon(build(t25)));
    CHECK(upsilon_knot(parse_knot("-T(2,5)")) == -upsilon(build(t25)));
    CHECK(upsilon_knot(parse_knot("T(2,5) # T(4,5)")) ==
          upsilon(build(t25)) + upsilon(build(t45)));
    CHECK(upsilon_knot(parse_knot("3*T(2,3)")) == upsilon_knot(parse_knot("T(2,3)")).scaled(3));
    CHECK(upsilon_knot(parse_knot("T(4,5) # -T(4,5)")).is_zero());
}

TEST_CASE("invariants_of bundles everything") {
    InvariantReport r = invariants_of(parse_knot("T(2,5)"));
    CHECK(r.tau == 2);
    CHECK(r.epsilon == 1);
    CHECK(r.a1 == 1);
    CHECK(r.upsilon.evaluate(Rational(1)) == Rational(-2));
    CHECK(r.genus_bound_slope == Rational(2));

    InvariantReport u = invariants_of(parse_knot("U"));
    CHECK(u.tau == 0);
    CHECK(u.epsilon == 0);
    CHECK(u.a1 == 0);
    CHECK(u.upsilon.is_zero());

    // Mirrors have the horizontal arrow leaving x0: a1 is not defined.
    InvariantReport m = invariants_of(parse_knot("-T(2,3)"));
    CHECK(m.tau == -1);
    CHECK(m.epsilon == -1);
    CHECK_FALSE(m.a1.has_value());
}
