#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotcalc/errors.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/laurent.hpp"
#include "knotcalc/reduce.hpp"

using namespace knotcalc;

namespace {

Rational r(long long p, long long q = 1) { return Rational(p, q); }

BifilteredComplex staircase_of(const LaurentPoly& delta) {
    return BifilteredComplex::staircase(staircase_exponents(delta));
}

BifilteredComplex t23() { return staircase_of(torus_alexander(2, 3)); }
BifilteredComplex t25() { return staircase_of(torus_alexander(2, 5)); }
BifilteredComplex t45() { return staircase_of(torus_alexander(4, 5)); }
BifilteredComplex unknot() { return staircase_of(LaurentPoly::one()); }

PLFunction tent() { return PLFunction({{r(0), r(0)}, {r(1), r(-2)}, {r(2), r(0)}}); }

}  // namespace

TEST_CASE("tau of staircases and duals") {
    CHECK(tau(unknot()) == 0);
    CHECK(tau(t23()) == 1);
    CHECK(tau(t25()) == 2);
    CHECK(tau(t45()) == 6);
    CHECK(tau(BifilteredComplex::dual(t45())) == -6);
    CHECK(tau(BifilteredComplex::tensor(t23(), BifilteredComplex::dual(t23()))) == 0);
}

TEST_CASE("tau_min_cycle agrees with the basis-change route") {
    BifilteredComplex sum = BifilteredComplex::tensor(t25(), t23());
    CHECK(tau_min_cycle(sum) == 3);
    CHECK(tau_min_cycle(t45()) == 6);
    CHECK_THROWS_AS(tau_min_cycle(t23(), 0), CapExceededError);
}

TEST_CASE("upsilon of small staircases") {
    CHECK(upsilon(unknot()).is_zero());
    CHECK(upsilon(t23()) == PLFunction({{r(0), r(0)}, {r(1), r(-1)}, {r(2), r(0)}}));
    CHECK(upsilon(t25()) == tent());
    // T(3,4): same staircase shape as T(2,5) scaled, tau = 3.
    PLFunction u34 = upsilon(staircase_of(torus_alexander(3, 4)));
    CHECK(u34.evaluate(r(1)) == r(-2));
    CHECK(u34.initial_slope() == r(-3));
    CHECK(u34 == u34.reflected());
}

TEST_CASE("upsilon respects duals and sums") {
    CHECK(upsilon(BifilteredComplex::dual(t25())) == -upsilon(t25()));
    BifilteredComplex sum = BifilteredComplex::tensor(t25(), t23());
    CHECK(upsilon(sum) == upsilon(t25()) + upsilon(t23()));
    BifilteredComplex zero = BifilteredComplex::tensor(t25(), BifilteredComplex::dual(t25()));
    CHECK(upsilon(zero).is_zero());
}

TEST_CASE("upsilon cap") {
    CHECK_THROWS_AS(upsilon(t45(), 3), CapExceededError);
    CHECK_THROWS_AS(upsilon_brute_oracle(t45(), r(1), 3), CapExceededError);
}

TEST_CASE("brute oracle matches the envelope") {
    for (const Rational& t : {r(0), r(1, 7), r(2, 3), r(1), r(13, 9), r(2)}) {
        CHECK(upsilon_brute_oracle(t45(), t) == upsilon(t45()).evaluate(t));
        CHECK(upsilon_brute_oracle(t23(), t) == upsilon(t23()).evaluate(t));
    }
    BifilteredComplex sum = BifilteredComplex::tensor(t23(), BifilteredComplex::dual(t25()));
    CHECK(upsilon_brute_oracle(sum, r(1, 2)) == upsilon(sum).evaluate(r(1, 2)));
}

TEST_CASE("epsilon") {
    CHECK(epsilon(unknot()) == 0);
    CHECK(epsilon(t23()) == 1);
    CHECK(epsilon(t45()) == 1);
    CHECK(epsilon(BifilteredComplex::dual(t23())) == -1);
    CHECK(epsilon(BifilteredComplex::tensor(t23(), BifilteredComplex::dual(t23()))) == 0);
}

TEST_CASE("a1") {
    CHECK(a1(unknot()) == 0);
    CHECK(a1(t25()) == 1);
    CHECK(a1(staircase_of(cable_alexander(2, 5, torus_alexander(2, 3)))) == 1);
    CHECK_THROWS_AS(a1(BifilteredComplex::dual(t23())), NotStandardError);
}

TEST_CASE("epsilon_from_a1") {
    CHECK(epsilon_from_a1(1, 2) == 1);
    CHECK_FALSE(epsilon_from_a1(2, 1).has_value());
    CHECK_FALSE(epsilon_from_a1(1, 1).has_value());
}

TEST_CASE("max_slope is the genus bound") {
    CHECK(max_slope(upsilon(t45())) <= r(6));
    CHECK(max_slope(upsilon(t25())) == r(2));
    CHECK(max_slope(PLFunction()) == r(0));
}
