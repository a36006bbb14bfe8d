#ifndef KNOTCALC_REDUCE_HPP
#define KNOTCALC_REDUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/complex.hpp"

namespace knotcalc {

/// Filtered Gaussian elimination of all (0,0)-arrows. Preserves the
/// filtered chain-homotopy type; the result has no (0,0)-arrows. May
/// return an empty complex when everything cancels.
BifilteredComplex cancel_zero_arrows(const BifilteredComplex& c);

/// Connected components of the undirected arrow graph, in order of their
/// smallest generator index. Their direct sum reassembles the input.
std::vector<BifilteredComplex> split_components(const BifilteredComplex& c);

/// Homology of the total complex as a module over F2[U, U^-1].
struct GlobalHomology {
    enum class Kind { Acyclic, RankOne, Other };

    Kind kind = Kind::Acyclic;
    int rank = 0;
    /// Maslov grading of the surviving generator, reduced mod 2 to {0,1}
    /// (the U-action shifts gradings by 2, so only the parity is
    /// basis-independent).
    int grading = 0;
};

GlobalHomology check_global_homology(const BifilteredComplex& c);

struct Pairing {
    std::string source;
    std::string target;
    ArrowKind kind = ArrowKind::Vertical;
    int length = 0;

    bool operator==(const Pairing&) const = default;
};

/// A filtered change of basis together with its matching data. After
/// vertical simplification the vertical arrows pair basis elements
/// bijectively except for the distinguished generator x0, which carries
/// the vertical homology and has M(x0) = 0.
struct SimplifiedBasis {
    BifilteredComplex complex;
    std::string distinguished;  // x0
    std::vector<Pairing> pairing;
};

/// Filtered base changes on the i = 0 column until the vertical
/// differential is a perfect matching plus one unpaired element of
/// Maslov grading 0. Deterministic: vertical arrows are processed
/// shortest-first, ties broken by generator name order.
/// Requires a reduced complex; throws NotKnotComplexError if the
/// vertical homology is not rank one in grading zero.
SimplifiedBasis vertically_simplify(const BifilteredComplex& c);

/// Vertical followed by horizontal simplification, iterated until both
/// matchings hold simultaneously. The pairing list contains both kinds.
SimplifiedBasis simplify_fully(const BifilteredComplex& c);

/// Alternating horizontal/vertical arrow lengths from the vertical
/// homology generator to the point of symmetry.
struct StandardForm {
    std::vector<int> lengths;

    bool operator==(const StandardForm&) const = default;
};

/// Reads the chain through x0: alternately the unique incoming horizontal
/// arrow and the vertical pairing of its source, stopping at the point of
/// symmetry (Alexander grading 0). Returns nullopt when the required
/// arrow is absent or non-unique ("not standard" is a value, not a fault).
std::optional<StandardForm> standard_form(const BifilteredComplex& c);

/// Largest input size homology_component will attempt to simplify; the
/// two-direction matching search is not worth running past this point.
inline constexpr std::size_t kHomologyComponentCap = 256;

/// Convenience: the unique component carrying the rank-one global
/// homology after full simplification; throws if the complex does not
/// split into one such component plus acyclic ones. Throws
/// CapExceededError above kHomologyComponentCap generators.
BifilteredComplex homology_component(const BifilteredComplex& c);

}  // namespace knotcalc

#endif
