#ifndef KNOTCALC_KNOTS_HPP
#define KNOTCALC_KNOTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "knotcalc/complex.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

/// Abstract syntax of knot expressions:
///   expr   := term { "#" term }
///   term   := ["-"] factor
///   factor := INT "*" factor | atom
///   atom   := "U" | "T(" INT "," INT ")" | "C(" INT "," INT ";" expr ")"
///           | "(" expr ")"
struct KnotExpr {
    enum class Kind { Unknot, Torus, Cable, Mirror, Sum, Multiple };

    Kind kind = Kind::Unknot;
    int p = 0, q = 0;        // Torus(p,q) / Cable(s=p, t=q; child)
    long long multiple = 0;  // Multiple(n, child); n < 0 means |n| mirrors
    std::vector<KnotExpr> children;

    static KnotExpr unknot();
    static KnotExpr torus(int p, int q);
    static KnotExpr cable(int s, int t, KnotExpr companion);
    static KnotExpr mirror(KnotExpr e);
    static KnotExpr sum(std::vector<KnotExpr> terms);
    static KnotExpr times(long long n, KnotExpr e);

    std::string to_string() const;
};

/// Parses the grammar above. "#" is left-associative; unary minus binds
/// tighter than "#". Throws ParseError with the offending position.
KnotExpr parse_knot(const std::string& text);

/// Alexander polynomial of the expression (multiplicative under sums,
/// invariant under mirrors). Cable companions are gated through
/// staircase_exponents.
LaurentPoly alexander(const KnotExpr& expr);

/// The full Kunneth model: atoms become staircases, Mirror becomes dual,
/// Sum and Multiple become tensor products. Errors name the atom whose
/// Alexander polynomial fails the L-space staircase gate.
BifilteredComplex build(const KnotExpr& expr);

/// A filtered-homotopy-equivalent model kept small by simplifying each
/// tensor factor and retaining only the summand that carries the global
/// homology (the discarded components are verified acyclic in the global,
/// vertical and horizontal senses). Falls back to the full tensor when
/// that verification fails.
BifilteredComplex build_reduced_model(const KnotExpr& expr);

/// Upsilon of the knot expression via additivity: per connected-sum
/// factor, negating for mirrors and scaling for multiples.
PLFunction upsilon_knot(const KnotExpr& expr, int cap = kUpsilonCap);

/// Full invariant bundle for an expression (tau/epsilon/a1 on the reduced
/// model, upsilon via additivity).
InvariantReport invariants_of(const KnotExpr& expr);

}  // namespace knotcalc

#endif
