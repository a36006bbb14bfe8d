#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotcalc/errors.hpp"
#include "knotcalc/laurent.hpp"

using namespace knotcalc;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p = p + LaurentPoly::monomial(e, c);
    return p;
}

}  // namespace

TEST_CASE("arithmetic and accessors") {
    LaurentPoly p = poly({{2, 1}, {0, -3}, {-1, 2}});
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(-1) == 2);
    CHECK(p.top_exponent() == 2);
    CHECK(p.evaluate_at_one() == 0);
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(LaurentPoly::zero().top_exponent(), ArgumentError);

    // (t - 1)(t + 1) = t^2 - 1
    CHECK(poly({{1, 1}, {0, -1}}) * poly({{1, 1}, {0, 1}}) == poly({{2, 1}, {0, -1}}));
    CHECK(p.substitute_power(3) == poly({{6, 1}, {0, -3}, {-3, 2}}));
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p = poly({{1, 1}}) + poly({{1, -1}});
    CHECK(p.is_zero());
    CHECK(p.coeffs().empty());
}

TEST_CASE("to_string") {
    CHECK(poly({{2, 1}, {1, -1}, {0, 1}}).to_string() == "t^2 - t + 1");
    CHECK(poly({{-1, 1}}).to_string() == "t^-1");
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(poly({{0, -2}}).to_string() == "-2");
}

TEST_CASE("torus Alexander polynomials") {
    CHECK(torus_alexander(2, 3) == poly({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(torus_alexander(2, 5) == poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
    CHECK(torus_alexander(3, 4) == poly({{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}}));
    CHECK(torus_alexander(4, 5) ==
          poly({{6, 1}, {5, -1}, {2, 1}, {0, -1}, {-2, 1}, {-5, -1}, {-6, 1}}));
    CHECK(torus_alexander(3, 2) == torus_alexander(2, 3));

    for (auto [p, q] : {std::pair{2, 3}, {2, 7}, {3, 5}, {5, 7}, {6, 7}}) {
        LaurentPoly d = torus_alexander(p, q);
        CHECK(d.is_symmetric());
        CHECK(d.evaluate_at_one() == 1);
        CHECK(d.top_exponent() == (p - 1) * (q - 1) / 2);
    }
}

TEST_CASE("torus Alexander argument gates") {
    CHECK_THROWS_AS(torus_alexander(2, 4), ArgumentError);
    CHECK_THROWS_AS(torus_alexander(1, 5), ArgumentError);
    CHECK_THROWS_AS(torus_alexander(101, 103), ArgumentError);
}

TEST_CASE("cable Alexander polynomial") {
    // (2,5)-cable of the trefoil: Delta(t^2) * Delta_{T(2,5)}(t).
    LaurentPoly got = cable_alexander(2, 5, torus_alexander(2, 3));
    CHECK(got == poly({{4, 1}, {3, -1}, {0, 1}, {-3, -1}, {-4, 1}}));

    // Trivial pattern: the (s,1)-cable keeps Delta(t^s).
    CHECK(cable_alexander(3, 1, torus_alexander(2, 3)) ==
          torus_alexander(2, 3).substitute_power(3));

    CHECK_THROWS_AS(cable_alexander(1, 5, LaurentPoly::one()), ArgumentError);
    CHECK_THROWS_AS(cable_alexander(2, 4, LaurentPoly::one()), ArgumentError);
    CHECK_THROWS_AS(cable_alexander(2, 5, poly({{1, 1}})), ArgumentError);
}

TEST_CASE("staircase exponent gate") {
    CHECK(staircase_exponents(torus_alexander(2, 3)) == StaircaseExponents{{1, 0, -1}});
    CHECK(staircase_exponents(cable_alexander(2, 5, torus_alexander(2, 3))) ==
          StaircaseExponents{{4, 3, 0, -3, -4}});
    CHECK(staircase_exponents(torus_alexander(4, 5)) ==
          StaircaseExponents{{6, 5, 2, 0, -2, -5, -6}});
    CHECK(staircase_exponents(LaurentPoly::one()) == StaircaseExponents{{0}});

    // Figure-eight polynomial: symmetric but not an L-space staircase.
    CHECK_THROWS_AS(staircase_exponents(poly({{1, -1}, {0, 3}, {-1, -1}})), ArgumentError);
    // Coefficients outside {+1,-1} (connected sum of two trefoils).
    CHECK_THROWS_AS(staircase_exponents(torus_alexander(2, 3) * torus_alexander(2, 3)),
                    ArgumentError);
    CHECK_THROWS_AS(staircase_exponents(LaurentPoly::zero()), ArgumentError);
}
