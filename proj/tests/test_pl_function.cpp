#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotcalc/errors.hpp"
#include "knotcalc/pl_function.hpp"
#include "knotcalc/rational.hpp"

using namespace knotcalc;

namespace {

Rational r(long long p, long long q = 1) { return Rational(p, q); }

PLFunction tent() { return PLFunction({{r(0), r(0)}, {r(1), r(-2)}, {r(2), r(0)}}); }

}  // namespace

TEST_CASE("rational rendering") {
    CHECK(to_string(r(3)) == "3");
    CHECK(to_string(r(-1, 2)) == "-1/2");
    CHECK(to_string(r(4, 6)) == "2/3");
    CHECK(parse_rational("5/3") == r(5, 3));
    CHECK(parse_rational("-7") == r(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("normalization drops collinear breakpoints") {
    PLFunction f({{r(0), r(0)}, {r(1, 2), r(-1)}, {r(1), r(-2)}, {r(2), r(0)}});
    CHECK(f == tent());
    CHECK(f.breakpoints().size() == 3);
}

TEST_CASE("constructor rejects bad domains") {
    CHECK_THROWS_AS(PLFunction({{r(1), r(0)}, {r(2), r(0)}}), ArgumentError);
    CHECK_THROWS_AS(PLFunction({{r(0), r(0)}, {r(3, 2), r(1)}}), ArgumentError);
    CHECK_THROWS_AS(PLFunction({{r(0), r(0)}, {r(0), r(1)}, {r(2), r(0)}}), ArgumentError);
}

TEST_CASE("evaluate interpolates exactly") {
    PLFunction f = tent();
    CHECK(f.evaluate(r(0)) == r(0));
    CHECK(f.evaluate(r(1, 3)) == r(-2, 3));
    CHECK(f.evaluate(r(1)) == r(-2));
    CHECK(f.evaluate(r(7, 4)) == r(-1, 2));
    CHECK(f.evaluate(r(2)) == r(0));
    CHECK_THROWS_AS(f.evaluate(r(-1, 10)), ArgumentError);
    CHECK_THROWS_AS(f.evaluate(r(5, 2)), ArgumentError);
}

TEST_CASE("arithmetic") {
    PLFunction f = tent();
    CHECK((f + (-f)).is_zero());
    CHECK(f + f == f.scaled(2));
    CHECK(f.scaled(-3) == (-f).scaled(3));
    CHECK(PLFunction().is_zero());

    // Sum with a breakpoint the other function does not have.
    PLFunction g({{r(0), r(0)}, {r(1, 2), r(1)}, {r(2), r(1)}});
    PLFunction h = f + g;
    CHECK(h.evaluate(r(1, 2)) == r(0));
    CHECK(h.evaluate(r(1)) == r(-1));
    CHECK(h.evaluate(r(2)) == r(1));
}

TEST_CASE("reflection") {
    PLFunction f = tent();
    CHECK(f.reflected() == f);
    PLFunction g({{r(0), r(0)}, {r(1, 2), r(-1)}, {r(2), r(2)}});
    CHECK(g.reflected().evaluate(r(3, 2)) == r(-1));
    CHECK(g.reflected().evaluate(r(0)) == r(2));
    CHECK(g.reflected().reflected() == g);
}

TEST_CASE("slopes") {
    PLFunction f = tent();
    CHECK(f.max_slope() == r(2));
    CHECK(f.initial_slope() == r(-2));
    CHECK(PLFunction().max_slope() == r(0));
    PLFunction g({{r(0), r(0)}, {r(1, 3), r(-1)}, {r(2), r(0)}});
    CHECK(g.initial_slope() == r(-3));
    CHECK(g.max_slope() == r(3, 5));
}
