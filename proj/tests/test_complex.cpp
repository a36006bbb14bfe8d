#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotcalc/complex.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/laurent.hpp"

using namespace knotcalc;

namespace {

BifilteredComplex trefoil() { return BifilteredComplex::staircase(StaircaseExponents{{1, 0, -1}}); }

}  // namespace

TEST_CASE("alpha_name") {
    CHECK(alpha_name(0) == "a");
    CHECK(alpha_name(25) == "z");
    CHECK(alpha_name(26) == "aa");
    CHECK(alpha_name(27) == "ab");
    CHECK(alpha_name(26 * 27) == "aaa");
}

TEST_CASE("staircase construction") {
    BifilteredComplex c = trefoil();
    REQUIRE(c.size() == 3);
    CHECK(c.gen("a") == Generator{"a", 0, 1});
    CHECK(c.gen("b") == Generator{"b", -1, 0});
    CHECK(c.gen("c") == Generator{"c", -2, -1});
    CHECK(c.arrow_power("b", "a") == 1);
    CHECK(c.arrow_power("b", "c") == 0);
    CHECK(c.arrows().size() == 2);
    CHECK(c.validate().ok());
    CHECK(c.is_reduced());

    CHECK_THROWS_AS(BifilteredComplex::staircase(StaircaseExponents{{1, 0}}), ArgumentError);
    CHECK_THROWS_AS(BifilteredComplex::staircase(StaircaseExponents{{0, 0, 0}}), ArgumentError);
}

TEST_CASE("arrow classification") {
    BifilteredComplex c({{"u", 1, 2}, {"v", 0, 1}, {"w", 0, 2}, {"d", 0, 0}},
                        {{"u", "v", 0}, {"u", "w", 0}, {"u", "d", 1}});
    CHECK(c.classify({"u", "v", 0}) == ArrowKind::Vertical);
    CHECK(c.classify({"u", "w", 0}) == ArrowKind::ZeroZero);
    CHECK(c.classify({"u", "d", 1}) == ArrowKind::Diagonal);
    BifilteredComplex h({{"x", 0, 2}, {"y", -3, 0}}, {{"y", "x", 2}});
    CHECK(h.classify({"y", "x", 2}) == ArrowKind::Horizontal);
    CHECK_FALSE(c.is_reduced());
}

TEST_CASE("lattice translates") {
    BifilteredComplex c = trefoil();
    LatticeElement e = c.lattice("a", 2);
    CHECK(e.pos_i == -2);
    CHECK(e.pos_j == -1);
    CHECK(e.grading == -4);
    LatticeElement f = c.lattice("b", 0);
    CHECK(f.pos_i == 0);
    CHECK(f.pos_j == 0);
    CHECK(f.grading == -1);
}

TEST_CASE("validate catches broken complexes") {
    BifilteredComplex bad_grading({{"x", 0, 1}, {"y", 0, 0}}, {{"x", "y", 0}});
    CHECK_FALSE(bad_grading.validate().ok());

    BifilteredComplex bad_filtration({{"x", 1, 0}, {"y", 0, 1}}, {{"x", "y", 0}});
    CHECK_FALSE(bad_filtration.validate().ok());

    // d^2 through two parallel squares cancels mod 2; a single path does not.
    BifilteredComplex d2({{"x", 2, 2}, {"y", 1, 1}, {"z", 0, 0}},
                         {{"x", "y", 0}, {"y", "z", 0}});
    CHECK_FALSE(d2.validate().ok());

    CHECK_THROWS_AS(BifilteredComplex({{"x", 0, 0}, {"x", 0, 0}}, {}), ArgumentError);
    CHECK_THROWS_AS(BifilteredComplex({{"x", 0, 0}}, {{"x", "ghost", 0}}), ArgumentError);
}

TEST_CASE("tensor product") {
    BifilteredComplex t = trefoil();
    BifilteredComplex s = BifilteredComplex::tensor(t, t);
    CHECK(s.size() == 9);
    CHECK(s.validate().ok());
    CHECK(s.gen("a|a") == Generator{"a|a", 0, 2});
    CHECK(s.gen("b|c") == Generator{"b|c", -3, -1});
    CHECK(s.arrow_power("b|a", "a|a") == 1);
    CHECK(s.arrow_power("a|b", "a|c") == 0);
    // Arrows only move one factor.
    CHECK_FALSE(s.has_arrow("b|b", "a|a"));
}

TEST_CASE("dual") {
    BifilteredComplex t = trefoil();
    BifilteredComplex d = BifilteredComplex::dual(t);
    CHECK(d.gen("a*") == Generator{"a*", 0, -1});
    CHECK(d.gen("b*") == Generator{"b*", 1, 0});
    CHECK(d.arrow_power("a*", "b*") == 1);
    CHECK(d.arrow_power("c*", "b*") == 0);
    CHECK(d.validate().ok());
    CHECK(BifilteredComplex::dual(d) == t);
}

TEST_CASE("serialization round trip") {
    BifilteredComplex s = BifilteredComplex::tensor(trefoil(), BifilteredComplex::dual(trefoil()));
    BifilteredComplex back = BifilteredComplex::deserialize(s.serialize());
    CHECK(back == s);
}

TEST_CASE("deserialize rejects bad documents") {
    CHECK_THROWS_AS(BifilteredComplex::deserialize("not json"), ParseError);
    CHECK_THROWS_AS(BifilteredComplex::deserialize("{}"), ParseError);
    CHECK_THROWS_AS(BifilteredComplex::deserialize(R"({"generators":[],"arrows":[]})"),
                    ParseError);
    // Fractional grading.
    CHECK_THROWS_AS(BifilteredComplex::deserialize(
                        R"({"generators":[{"name":"x","maslov":0.5,"alexander":0}],"arrows":[]})"),
                    ParseError);
    // Grading-law violation.
    CHECK_THROWS_AS(
        BifilteredComplex::deserialize(
            R"({"generators":[{"name":"x","maslov":0,"alexander":1},
                              {"name":"y","maslov":0,"alexander":0}],
                "arrows":[{"from":"x","to":"y","upower":0}]})"),
        ParseError);
}

TEST_CASE("equality and order isomorphism") {
    BifilteredComplex t = trefoil();
    BifilteredComplex renamed({{"p", 0, 1}, {"q", -1, 0}, {"r", -2, -1}},
                              {{"q", "p", 1}, {"q", "r", 0}});
    CHECK_FALSE(t == renamed);
    CHECK(t.isomorphic_by_order(renamed));
    CHECK_FALSE(t.isomorphic_by_order(BifilteredComplex::dual(t)));
}
