#include "knotcalc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/reduce.hpp"

namespace knotcalc {

namespace {

/// Collects failure detail lines for one manifest entry.
class Check {
public:
    Check(std::string id, std::string description)
        : id_(std::move(id)), description_(std::move(description)) {}

    void expect(bool condition, const std::string& what) {
        if (condition) return;
        if (!detail_.empty()) detail_ += "; ";
        detail_ += what;
    }

    CheckResult result() const { return CheckResult{id_, description_, detail_.empty(), detail_}; }

private:
    std::string id_, description_, detail_;
};

LaurentPoly poly_from(const std::vector<std::pair<int, long long>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p = p + LaurentPoly::monomial(e, c);
    return p;
}

const char* kMainKnot = "T(2,5) # -T(4,5) # C(2,5;T(2,3))";

BifilteredComplex summand_complex() {
    return BifilteredComplex({{"x", 0, 2}, {"y", -3, 0}, {"z", -4, -2}},
                             {{"y", "x", 2}, {"y", "z", 0}});
}

PLFunction tent_function() {
    return PLFunction({{Rational(0), Rational(0)},
                       {Rational(1), Rational(-2)},
                       {Rational(2), Rational(0)}});
}

std::string pl_str(const PLFunction& f) { return f.to_string(); }

CheckResult check_alexander() {
    Check ck("alexander", "pinned torus and cable Alexander polynomials");
    LaurentPoly t45 = poly_from({{6, 1}, {5, -1}, {2, 1}, {0, -1}, {-2, 1}, {-5, -1}, {-6, 1}});
    ck.expect(torus_alexander(4, 5) == t45,
              "torus_alexander(4,5) = " + torus_alexander(4, 5).to_string());
    LaurentPoly cable = poly_from({{4, 1}, {3, -1}, {0, 1}, {-3, -1}, {-4, 1}});
    LaurentPoly got = cable_alexander(2, 5, torus_alexander(2, 3));
    ck.expect(got == cable, "cable_alexander(2,5,.) = " + got.to_string());
    return ck.result();
}

CheckResult check_staircase_gradings() {
    Check ck("staircase-gradings", "gradings and differentials of the C(2,5;T(2,3)) staircase");
    BifilteredComplex c =
        BifilteredComplex::staircase(staircase_exponents(cable_alexander(2, 5, torus_alexander(2, 3))));
    std::vector<Generator> want = {
        {"a", 0, 4}, {"b", -1, 3}, {"c", -2, 0}, {"d", -7, -3}, {"e", -8, -4}};
    ck.expect(c.generators() == want, "generator gradings differ");
    ck.expect(c.arrows().size() == 4, "expected exactly 4 differential terms");
    ck.expect(c.has_arrow("b", "a") && c.arrow_power("b", "a") == 1, "db misses U a");
    ck.expect(c.has_arrow("b", "c") && c.arrow_power("b", "c") == 0, "db misses c");
    ck.expect(c.has_arrow("d", "c") && c.arrow_power("d", "c") == 3, "dd misses U^3 c");
    ck.expect(c.has_arrow("d", "e") && c.arrow_power("d", "e") == 0, "dd misses e");
    return ck.result();
}

CheckResult check_standard_forms() {
    Check ck("standard-forms", "standard forms and the reduced summand of T(4,5) # -C(2,5;T(2,3))");
    auto form_of = [](const char* text) { return standard_form(build(parse_knot(text))); };
    auto f1 = form_of("C(2,5;T(2,3))");
    ck.expect(f1 && f1->lengths == std::vector<int>{1, 3}, "C(2,5;T(2,3)) form != [1,3]");
    auto f2 = form_of("T(4,5)");
    ck.expect(f2 && f2->lengths == std::vector<int>{1, 3, 2}, "T(4,5) form != [1,3,2]");

    BifilteredComplex carrier = homology_component(build(parse_knot("T(4,5) # -C(2,5;T(2,3))")));
    auto f3 = standard_form(carrier);
    ck.expect(f3 && f3->lengths == std::vector<int>{2}, "summand chain form != [2]");
    std::multiset<std::pair<int, int>> gradings, want{{0, 2}, {-3, 0}, {-4, -2}};
    for (const Generator& g : carrier.generators()) gradings.insert({g.maslov, g.alexander});
    ck.expect(gradings == want, "summand gradings differ");
    return ck.result();
}

CheckResult check_upsilon_exact() {
    Check ck("upsilon-exact", "exact upsilon breakpoints and brute-oracle agreement");
    PLFunction tent = tent_function();
    BifilteredComplex summand = summand_complex();
    BifilteredComplex t25 = build(parse_knot("T(2,5)"));
    ck.expect(upsilon(summand) == tent, "summand upsilon = " + pl_str(upsilon(summand)));
    ck.expect(upsilon(t25) == tent, "T(2,5) upsilon = " + pl_str(upsilon(t25)));

    std::mt19937 rng(20260826);
    std::uniform_int_distribution<int> den(1, 12);
    for (const BifilteredComplex* c : {&summand, &t25}) {
        PLFunction u = upsilon(*c);
        for (int k = 0; k < 25; ++k) {
            int q = den(rng);
            int p = std::uniform_int_distribution<int>(0, 2 * q)(rng);
            Rational t(p, q);
            Rational direct = upsilon_brute_oracle(*c, t);
            if (u.evaluate(t) != direct) {
                std::ostringstream os;
                os << "oracle disagrees at t = " << to_string(t);
                ck.expect(false, os.str());
                break;
            }
        }
    }
    return ck.result();
}

CheckResult check_main_upsilon() {
    Check ck("main-upsilon", std::string("upsilon of ") + kMainKnot + " vanishes, also for multiples");
    KnotExpr k = parse_knot(kMainKnot);
    ck.expect(upsilon_knot(k).is_zero(), "upsilon not identically 0");
    for (long long n : {2, 3})
        ck.expect(upsilon_knot(KnotExpr::times(n, k)).is_zero(),
                  std::to_string(n) + "K upsilon not identically 0");
    return ck.result();
}

CheckResult check_main_epsilon() {
    Check ck("main-epsilon", "epsilon via a1 and directly for the main knot and its double");
    int a_big = a1(build(parse_knot("T(4,5) # -C(2,5;T(2,3))")));
    ck.expect(a_big == 2, "a1(T(4,5) # -C(2,5;T(2,3))) = " + std::to_string(a_big));
    int a_small = a1(build(parse_knot("T(2,5)")));
    ck.expect(a_small == 1, "a1(T(2,5)) = " + std::to_string(a_small));
    auto rule = epsilon_from_a1(a_small, a_big);
    ck.expect(rule && *rule == 1, "epsilon_from_a1 inconclusive");

    KnotExpr k = parse_knot(kMainKnot);
    int eps = epsilon(build(k));  // full 175-generator tensor, no shortcuts
    ck.expect(eps == 1, "eps(K) = " + std::to_string(eps));
    int eps2 = epsilon(build_reduced_model(KnotExpr::times(2, k)));
    ck.expect(eps2 == 1, "eps(2K) = " + std::to_string(eps2));
    return ck.result();
}

CheckResult check_genus_bound() {
    Check ck("genus-bound", "zero upsilon genus bound with nonzero epsilon for the main knot");
    KnotExpr k = parse_knot(kMainKnot);
    Rational slope = max_slope(upsilon_knot(k));
    ck.expect(slope == Rational(0), "max slope = " + to_string(slope));
    ck.expect(epsilon(build_reduced_model(k)) != 0, "epsilon vanished");
    return ck.result();
}

struct CorpusEntry {
    std::string name;
    BifilteredComplex complex;
    LaurentPoly delta;
    int tau_formula;  // (p-1)(q-1)/2 for torus atoms, -1 otherwise
};

std::vector<CorpusEntry> base_corpus() {
    std::vector<CorpusEntry> out;
    for (int p = 2; p <= 7; ++p)
        for (int q = p + 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            KnotExpr e = KnotExpr::torus(p, q);
            out.push_back({e.to_string(), build(e), alexander(e), (p - 1) * (q - 1) / 2});
        }
    KnotExpr cable = parse_knot("C(2,5;T(2,3))");
    out.push_back({cable.to_string(), build(cable), alexander(cable), -1});
    return out;
}

int even_count(const BifilteredComplex& c) {
    int evens = 0;
    for (const Generator& g : c.generators())
        if (((g.maslov % 2) + 2) % 2 == 0) ++evens;
    return evens;
}

CheckResult check_properties() {
    Check ck("properties", "structural and invariant identities over the torus/cable corpus");
    std::vector<CorpusEntry> base = base_corpus();
    std::vector<CorpusEntry> all = base;
    for (const CorpusEntry& e : base)
        all.push_back({"-" + e.name, BifilteredComplex::dual(e.complex), e.delta, -1});

    for (const CorpusEntry& e : all) {
        ck.expect(e.complex.validate().ok(), e.name + ": invalid complex");
        ck.expect(BifilteredComplex::dual(BifilteredComplex::dual(e.complex)) == e.complex,
                  e.name + ": dual not involutive");
        PLFunction u = upsilon(e.complex);
        ck.expect(u == u.reflected(), e.name + ": upsilon(t) != upsilon(2-t)");
        int eps = epsilon(e.complex);
        int eps_dual = epsilon(BifilteredComplex::dual(e.complex));
        ck.expect(eps_dual == -eps, e.name + ": epsilon(-K) != -epsilon(K)");
        int t = tau(e.complex);
        if (eps == 0) ck.expect(t == 0, e.name + ": epsilon 0 but tau != 0");
        if (u.is_zero()) ck.expect(t == 0, e.name + ": upsilon 0 but tau != 0");
        ck.expect(max_slope(u) <= Rational(e.delta.top_exponent()),
                  e.name + ": slope bound exceeds deg Delta");
        ck.expect(u.initial_slope() == Rational(-t), e.name + ": first slope != -tau");
    }

    // Pairwise sums, capped by the upsilon enumeration budget.
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) {
            BifilteredComplex sum = BifilteredComplex::tensor(all[i].complex, all[j].complex);
            ck.expect(sum.validate().ok(), all[i].name + " # " + all[j].name + ": invalid sum");
            if (even_count(sum) > kUpsilonCap) continue;
            PLFunction u = upsilon(sum);
            PLFunction expected = upsilon(all[i].complex) + upsilon(all[j].complex);
            ck.expect(u == expected, all[i].name + " # " + all[j].name + ": upsilon not additive");
            ck.expect(u == u.reflected(),
                      all[i].name + " # " + all[j].name + ": sum upsilon not symmetric");
            int eps = epsilon(sum);
            int t = tau(sum);
            if (eps == 0)
                ck.expect(t == 0, all[i].name + " # " + all[j].name + ": epsilon 0, tau != 0");
            if (u.is_zero())
                ck.expect(t == 0, all[i].name + " # " + all[j].name + ": upsilon 0, tau != 0");
        }
    return ck.result();
}

CheckResult check_tau() {
    Check ck("tau", "closed-formula tau across the corpus and additivity on sums");
    std::vector<CorpusEntry> base = base_corpus();
    for (const CorpusEntry& e : base) {
        if (e.tau_formula < 0) continue;
        int t = tau(e.complex);
        ck.expect(t == e.tau_formula,
                  e.name + ": tau = " + std::to_string(t) + ", formula " +
                      std::to_string(e.tau_formula));
    }
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j) {
            BifilteredComplex sum = BifilteredComplex::tensor(base[i].complex, base[j].complex);
            if (sum.size() > 175) continue;
            int t = tau(sum);
            int expected = tau(base[i].complex) + tau(base[j].complex);
            ck.expect(t == expected, base[i].name + " # " + base[j].name + ": tau not additive");
        }
    return ck.result();
}

}  // namespace

std::vector<CheckResult> run_verification_checks() {
    using Entry = std::pair<const char*, CheckResult (*)()>;
    // A check that throws is reported as a failure of that entry alone.
    const Entry entries[] = {
        {"alexander", check_alexander},
        {"staircase-gradings", check_staircase_gradings},
        {"standard-forms", check_standard_forms},
        {"upsilon-exact", check_upsilon_exact},
        {"main-upsilon", check_main_upsilon},
        {"main-epsilon", check_main_epsilon},
        {"genus-bound", check_genus_bound},
        {"properties", check_properties},
        {"tau", check_tau},
    };
    std::vector<CheckResult> results;
    const bool debug = std::getenv("KNOTCALC_DEBUG") != nullptr;
    for (const auto& [id, fn] : entries) {
        auto start = std::chrono::steady_clock::now();
        try {
            results.push_back(fn());
        } catch (const std::exception& err) {
            results.push_back(CheckResult{id, "check aborted", false, err.what()});
        }
        if (debug) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            std::fprintf(stderr, "[debug] %s: %.1fs\n", id, elapsed.count());
        }
    }
    return results;
}

}  // namespace knotcalc
