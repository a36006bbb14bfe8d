#ifndef KNOTCALC_INVARIANTS_HPP
#define KNOTCALC_INVARIANTS_HPP

#include <optional>
#include <string>

#include "knotcalc/complex.hpp"
#include "knotcalc/pl_function.hpp"
#include "knotcalc/rational.hpp"

namespace knotcalc {

/// Default cap on the number of grading-0 lattice generators the direct
/// upsilon engine and the brute oracle will enumerate over.
inline constexpr int kUpsilonCap = 24;

/// tau: Alexander grading of the vertical homology generator. Cross
/// checked against the minimum over grading-0 vertical cycles of the
/// maximal Alexander grading of their terms whenever that enumeration is
/// feasible. Requires a reduced knot complex.
int tau(const BifilteredComplex& c);

/// Independent route for tau: min over vertical cycles z of grading 0
/// with [z] != 0 in vertical homology of max_term A(term). Enumerates
/// subsets of the grading-0, i=0 generators; throws CapExceededError
/// beyond max_bits.
int tau_min_cycle(const BifilteredComplex& c, int max_bits = 20);

/// Exact upsilon: for every generating cycle z of the grading-0 homology,
/// phi_z(t) = max over terms at (i,j) of (1 - t/2) i + (t/2) j, and
/// Upsilon(t) = -2 min_z phi_z(t), assembled as an exact lower envelope.
/// Throws CapExceededError when the complex has more than `cap` grading-0
/// lattice generators (use additivity via upsilon_knot instead).
PLFunction upsilon(const BifilteredComplex& c, int cap = kUpsilonCap);

/// Single-point oracle: direct subset enumeration of all generating
/// cycles, returning -2 min max at the given t. Independent of the
/// envelope construction in upsilon().
Rational upsilon_brute_oracle(const BifilteredComplex& c, const Rational& t,
                              int cap = kUpsilonCap);

/// epsilon in {-1, 0, +1}: +1 if the vertical homology generator x0 is
/// the target of a horizontal arrow after simplification, -1 if x0 has a
/// nonzero outgoing horizontal differential, 0 otherwise.
int epsilon(const BifilteredComplex& c);

/// a1: U-power of the horizontal arrow into x0 after simplification
/// (first entry of the standard form); 0 when no such arrow exists and
/// x0 is horizontally untouched. Throws NotStandardError when x0 has an
/// outgoing horizontal arrow (use epsilon's general path instead).
int a1(const BifilteredComplex& c);

/// The one-directional rule: if a1(J) > a1(K) then epsilon(K # -J) = +1.
/// Returns nullopt ("inconclusive") when the hypothesis fails.
std::optional<int> epsilon_from_a1(int aK, int aJ);

/// Maximum segment slope of a piecewise-linear function; for Upsilon this
/// is the concordance genus bound s <= g_c(K).
Rational max_slope(const PLFunction& f);

struct InvariantReport {
    int tau = 0;
    int epsilon = 0;
    /// Absent when the complex is not standard (x0 has an outgoing
    /// horizontal arrow, epsilon = -1).
    std::optional<int> a1;
    PLFunction upsilon;
    Rational genus_bound_slope = Rational(0);  // max_slope of upsilon
};

}  // namespace knotcalc

#endif
