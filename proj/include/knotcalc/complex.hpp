#ifndef KNOTCALC_COMPLEX_HPP
#define KNOTCALC_COMPLEX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotcalc/laurent.hpp"

namespace knotcalc {

/// A module generator of CFK-infinity over F2[U, U^-1].
struct Generator {
    std::string name;
    int maslov = 0;     // M
    int alexander = 0;  // A

    bool operator==(const Generator&) const = default;
};

/// A differential term: the coefficient of U^upower * target in
/// d(source) is 1 over F2.
struct Arrow {
    std::string from;
    std::string to;
    int upower = 0;

    bool operator==(const Arrow&) const = default;
    auto operator<=>(const Arrow&) const = default;
};

enum class ArrowKind { Vertical, Horizontal, Diagonal, ZeroZero };

/// A U-translate U^n x of a generator, with its position in the (i, j)
/// plane and its absolute grading.
struct LatticeElement {
    std::string generator;
    int translate = 0;  // n in U^n x
    int pos_i = 0;      // -n
    int pos_j = 0;      // A(x) - n
    int grading = 0;    // M(x) - 2n
};

struct ValidationReport {
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Finitely generated bifiltered chain complex over F2[U, U^-1].
/// Immutable in spirit: constructors build it, operations return new
/// complexes. Generator order is construction order and is preserved by
/// every operation, so outputs are deterministic.
class BifilteredComplex {
public:
    BifilteredComplex() = default;
    BifilteredComplex(std::vector<Generator> generators, std::vector<Arrow> arrows);

    const std::vector<Generator>& generators() const { return gens_; }
    std::vector<Arrow> arrows() const;
    std::size_t size() const { return gens_.size(); }

    bool has_generator(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws ArgumentError
    const Generator& gen(int index) const { return gens_[index]; }
    const Generator& gen(const std::string& name) const;
    bool has_arrow(const std::string& from, const std::string& to) const;
    /// U-power of the arrow from -> to; requires the arrow to exist.
    int arrow_power(const std::string& from, const std::string& to) const;

    ArrowKind classify(const Arrow& a) const;
    LatticeElement lattice(const std::string& generator, int translate) const;

    /// Lists every violated invariant: grading law, filtration law,
    /// duplicate names, dangling arrows, d^2 != 0.
    ValidationReport validate() const;
    bool is_reduced() const;  // no (0,0)-arrows

    /// Staircase model of an L-space knot from its exponent sequence.
    /// Generators are named a, b, c, ... in order of the exponents;
    /// M(first) = 0 and the rest is forced by the grading law.
    static BifilteredComplex staircase(const StaircaseExponents& exps);

    /// Kunneth tensor product; generator names are "x|y".
    static BifilteredComplex tensor(const BifilteredComplex& c1,
                                    const BifilteredComplex& c2);

    /// Dual complex: gradings negated, arrows transposed with the same
    /// U-power. Generator names gain a "*" suffix.
    static BifilteredComplex dual(const BifilteredComplex& c);

    /// Structured-text document (exact integers only).
    std::string serialize() const;
    static BifilteredComplex deserialize(const std::string& document);

    /// Name-for-name equality (same generators in order, same arrows).
    bool operator==(const BifilteredComplex& other) const;
    /// Equality up to renaming along generator order.
    bool isomorphic_by_order(const BifilteredComplex& other) const;

private:
    friend class SimplifyEngine;

    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    // (source index, target index) -> upower. The grading law pins the
    // power of any arrow between a fixed pair, so this keying is lossless.
    std::map<std::pair<int, int>, int> arrows_;
};

/// Spreadsheet-style generator names: 0 -> "a", 25 -> "z", 26 -> "aa", ...
std::string alpha_name(std::size_t k);

}  // namespace knotcalc

#endif
