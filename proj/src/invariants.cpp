#include "knotcalc/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/reduce.hpp"

namespace knotcalc {

namespace {

/// Echelonized span of bit vectors over F2.
class F2Span {
public:
    /// Inserts v; returns true when v was independent of the span.
    bool add(std::uint64_t v) {
        v = reduce(v);
        if (v == 0) return false;
        basis_.push_back(v);
        std::sort(basis_.begin(), basis_.end(), std::greater<>());
        return true;
    }

    std::uint64_t reduce(std::uint64_t v) const {
        for (std::uint64_t b : basis_) {
            std::uint64_t msb = 1ULL << (63 - __builtin_clzll(b));
            if (v & msb) v ^= b;
        }
        return v;
    }

    bool contains(std::uint64_t v) const { return reduce(v) == 0; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::uint64_t>& basis() const { return basis_; }

private:
    std::vector<std::uint64_t> basis_;
};

/// The grading-0 / grading-1 slice of the lattice: one U-translate of each
/// even-Maslov generator sits in grading 0, one of each odd-Maslov
/// generator in grading 1. Every arrow from an odd generator lands on
/// even generators and vice versa, so the boundary maps restrict to
/// masks over these index sets.
struct GradingSlice {
    std::vector<int> evens;  // generator indices, complex order
    std::vector<int> odds;
    std::vector<int> pos_i, pos_j;            // plane position per even entry
    std::vector<std::uint64_t> from_odd;      // per odd: targets among evens
    std::vector<std::uint64_t> from_even;     // per even: targets among odds
};

GradingSlice make_slice(const BifilteredComplex& c) {
    GradingSlice s;
    std::vector<int> even_slot(c.size(), -1), odd_slot(c.size(), -1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Generator& g = c.gen(static_cast<int>(i));
        if (((g.maslov % 2) + 2) % 2 == 0) {
            even_slot[i] = static_cast<int>(s.evens.size());
            s.evens.push_back(static_cast<int>(i));
            int n = g.maslov / 2;  // U^n g has grading 0
            s.pos_i.push_back(-n);
            s.pos_j.push_back(g.alexander - n);
        } else {
            odd_slot[i] = static_cast<int>(s.odds.size());
            s.odds.push_back(static_cast<int>(i));
        }
    }
    s.from_odd.assign(s.odds.size(), 0);
    s.from_even.assign(s.evens.size(), 0);
    for (const Arrow& a : c.arrows()) {
        int u = c.index_of(a.from);
        int v = c.index_of(a.to);
        if (odd_slot[u] != -1)
            s.from_odd[odd_slot[u]] |= 1ULL << even_slot[v];
        else
            s.from_even[even_slot[u]] |= 1ULL << odd_slot[v];
    }
    return s;
}

/// Kernel of the boundary restricted to grading 0, as tag masks over the
/// even generators.
std::vector<std::uint64_t> cycle_space(const GradingSlice& s) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // (image, tag)
    std::vector<std::uint64_t> kernel;
    for (std::size_t i = 0; i < s.evens.size(); ++i) {
        std::uint64_t image = s.from_even[i];
        std::uint64_t tag = 1ULL << i;
        for (const auto& [pimg, ptag] : rows) {
            std::uint64_t msb = 1ULL << (63 - __builtin_clzll(pimg));
            if (image & msb) {
                image ^= pimg;
                tag ^= ptag;
            }
        }
        if (image == 0)
            kernel.push_back(tag);
        else
            rows.push_back({image, tag});
    }
    return kernel;
}

F2Span boundary_space(const GradingSlice& s) {
    F2Span span;
    for (std::uint64_t b : s.from_odd) span.add(b);
    return span;
}

/// A generating cycle: a fixed grading-0 cycle outside the boundary
/// space. All others form its coset modulo boundaries.
std::uint64_t generating_cycle(const GradingSlice& s, const std::vector<std::uint64_t>& kernel,
                               const F2Span& boundaries) {
    int homology_dim = 0;
    std::uint64_t z_star = 0;
    F2Span quotient = boundaries;
    for (std::uint64_t z : kernel)
        if (quotient.add(z)) {
            ++homology_dim;
            z_star = z;
        }
    if (homology_dim != 1)
        throw NotKnotComplexError("grading-0 homology has rank " + std::to_string(homology_dim) +
                                  ", expected 1");
    return z_star;
}

Rational line_value(int i, int j, const Rational& t) {
    // (1 - t/2) i + (t/2) j
    return Rational(i) + Rational(j - i) * t / 2;
}

void require_cap(std::size_t evens, int cap, const char* what) {
    if (static_cast<int>(evens) > cap)
        throw CapExceededError(std::string(what) + ": " + std::to_string(evens) +
                               " grading-0 lattice generators exceed the cap of " +
                               std::to_string(cap) + "; use additivity via upsilon_knot");
}

}  // namespace

PLFunction upsilon(const BifilteredComplex& c, int cap) {
    GradingSlice s = make_slice(c);
    require_cap(s.evens.size(), cap, "upsilon");
    std::vector<std::uint64_t> kernel = cycle_space(s);
    F2Span boundaries = boundary_space(s);
    std::uint64_t z_star = generating_cycle(s, kernel, boundaries);

    // Every generating cycle is z_star + b for b in the boundary space.
    // phi_z only depends on the dominance-maximal positions of z's
    // support, so enumerate the coset once and keep unique antichains.
    std::set<std::vector<std::pair<int, int>>> antichains;
    const std::vector<std::uint64_t>& bbasis = boundaries.basis();
    std::uint64_t current = z_star;
    std::uint64_t steps = 1ULL << bbasis.size();
    for (std::uint64_t g = 0;; ++g) {
        std::vector<std::pair<int, int>> positions;
        for (std::uint64_t rest = current; rest;) {
            int bit = __builtin_ctzll(rest);
            rest &= rest - 1;
            positions.push_back({s.pos_i[bit], s.pos_j[bit]});
        }
        std::vector<std::pair<int, int>> maximal;
        for (const auto& p : positions) {
            bool dominated = false;
            for (const auto& q : positions)
                if (p != q && q.first >= p.first && q.second >= p.second) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(p);
        }
        std::sort(maximal.begin(), maximal.end());
        maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
        antichains.insert(std::move(maximal));
        if (g + 1 >= steps) break;
        current ^= bbasis[__builtin_ctzll(g + 1)];  // Gray code walk
    }

    // Candidate breakpoint abscissae: 0, 2, and every pairwise
    // intersection of the participating position lines.
    std::set<std::pair<int, int>> all_positions;
    for (const auto& chain : antichains)
        for (const auto& p : chain) all_positions.insert(p);
    std::vector<std::pair<int, int>> lines(all_positions.begin(), all_positions.end());
    std::set<Rational> ts{Rational(0), Rational(2)};
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            long long denom = (lines[b].second - lines[b].first) -
                              (lines[a].second - lines[a].first);
            if (denom == 0) continue;
            Rational t(2 * (lines[a].first - lines[b].first), denom);
            if (t > Rational(0) && t < Rational(2)) ts.insert(t);
        }

    std::vector<PLFunction::Breakpoint> points;
    for (const Rational& t : ts) {
        bool first = true;
        Rational best;
        for (const auto& chain : antichains) {
            Rational phi;
            bool inner_first = true;
            for (const auto& p : chain) {
                Rational v = line_value(p.first, p.second, t);
                if (inner_first || v > phi) phi = v;
                inner_first = false;
            }
            if (first || phi < best) best = phi;
            first = false;
        }
        points.push_back({t, Rational(-2) * best});
    }
    return PLFunction(std::move(points));
}

Rational upsilon_brute_oracle(const BifilteredComplex& c, const Rational& t, int cap) {
    GradingSlice s = make_slice(c);
    require_cap(s.evens.size(), cap, "upsilon_brute_oracle");
    F2Span boundaries = boundary_space(s);

    bool found = false;
    Rational best;
    std::uint64_t subsets = 1ULL << s.evens.size();
    std::uint64_t mask = 0, image = 0;
    for (std::uint64_t g = 0;; ++g) {
        if (mask != 0 && image == 0 && !boundaries.contains(mask)) {
            Rational phi;
            bool inner_first = true;
            for (std::uint64_t rest = mask; rest;) {
                int bit = __builtin_ctzll(rest);
                rest &= rest - 1;
                Rational v = line_value(s.pos_i[bit], s.pos_j[bit], t);
                if (inner_first || v > phi) phi = v;
                inner_first = false;
            }
            if (!found || phi < best) best = phi;
            found = true;
        }
        if (g + 1 >= subsets) break;
        int bit = __builtin_ctzll(g + 1);  // Gray code walk
        mask ^= 1ULL << bit;
        image ^= s.from_even[bit];
    }
    if (!found) throw NotKnotComplexError("no generating cycle in grading 0");
    return Rational(-2) * best;
}

int tau_min_cycle(const BifilteredComplex& c, int max_bits) {
    std::vector<int> grading0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.gen(static_cast<int>(i)).maslov == 0) grading0.push_back(static_cast<int>(i));
    if (static_cast<int>(grading0.size()) > max_bits)
        throw CapExceededError("tau_min_cycle: too many grading-0 generators");

    std::vector<int> slot(c.size(), -1);
    for (std::size_t k = 0; k < grading0.size(); ++k) slot[grading0[k]] = static_cast<int>(k);

    // Vertical differential out of grading 0 (targets have M = -1) and
    // into grading 0 (sources have M = 1); only U-power 0 terms live in
    // the i = 0 column.
    std::vector<int> minus1_slot(c.size(), -1);
    int minus1_count = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.gen(static_cast<int>(i)).maslov == -1)
            minus1_slot[i] = minus1_count++;
    std::vector<std::uint64_t> out_mask(grading0.size(), 0);
    std::vector<std::uint64_t> in_rows(c.size(), 0);
    for (const Arrow& a : c.arrows()) {
        if (a.upower != 0) continue;
        int u = c.index_of(a.from);
        int v = c.index_of(a.to);
        if (slot[u] != -1 && minus1_slot[v] != -1)
            out_mask[slot[u]] |= 1ULL << minus1_slot[v];
        if (c.gen(u).maslov == 1 && slot[v] != -1) in_rows[u] |= 1ULL << slot[v];
    }
    F2Span image;
    for (std::uint64_t row : in_rows) image.add(row);

    bool found = false;
    int best = 0;
    std::uint64_t subsets = 1ULL << grading0.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::uint64_t boundary = 0;
        for (std::uint64_t rest = mask; rest;) {
            int bit = __builtin_ctzll(rest);
            rest &= rest - 1;
            boundary ^= out_mask[bit];
        }
        if (boundary != 0) continue;              // not a vertical cycle
        if (image.contains(mask)) continue;       // zero in vertical homology
        int max_a = 0;
        bool inner_first = true;
        for (std::uint64_t rest = mask; rest;) {
            int bit = __builtin_ctzll(rest);
            rest &= rest - 1;
            int a_val = c.gen(grading0[bit]).alexander;
            if (inner_first || a_val > max_a) max_a = a_val;
            inner_first = false;
        }
        if (!found || max_a < best) best = max_a;
        found = true;
    }
    if (!found) throw NotKnotComplexError("no nonzero grading-0 vertical homology class");
    return best;
}

int tau(const BifilteredComplex& c) {
    SimplifiedBasis sb = vertically_simplify(c);
    int result = sb.complex.gen(sb.distinguished).alexander;
    // Cross-check against the independent minimal-cycle route when the
    // enumeration is feasible.
    int grading0 = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.gen(static_cast<int>(i)).maslov == 0) ++grading0;
    if (grading0 <= 16 && tau_min_cycle(c, 16) != result)
        throw Error("internal: tau routes disagree");
    return result;
}

int epsilon(const BifilteredComplex& c) {
    // Vertical simplification pins x0; epsilon is then read off the row
    // complex through j = A(x0). Every generator meets that row in exactly
    // one U-translate, the differential there is the horizontal arrows,
    // and the i-filtration orders the row by Alexander grading (higher A
    // sits lower). Row base changes only have to respect that single
    // filtration, so plain shortest-pivot Gaussian elimination applies.
    SimplifiedBasis sb = vertically_simplify(c.is_reduced() ? c : cancel_zero_arrows(c));
    const BifilteredComplex& r = sb.complex;
    int n = static_cast<int>(r.size());
    int x0 = r.index_of(sb.distinguished);

    std::vector<std::set<int>> out(n), in(n);
    for (const Arrow& a : r.arrows()) {
        if (r.classify(a) != ArrowKind::Horizontal) continue;
        int u = r.index_of(a.from), v = r.index_of(a.to);
        out[u].insert(v);
        in[v].insert(u);
    }
    std::vector<bool> alive(n, true);
    auto alexander = [&](int g) { return r.gen(g).alexander; };

    // Cancel pairs avoiding x0, shortest drop A(v) - A(u) first; shortest
    // pivots keep every implied base change within the row filtration.
    while (true) {
        int pu = -1, pv = -1, best = 0;
        for (int u = 0; u < n; ++u) {
            if (!alive[u] || u == x0) continue;
            for (int v : out[u]) {
                if (v == x0) continue;
                int drop = alexander(v) - alexander(u);
                if (pu == -1 || drop < best) {
                    pu = u;
                    pv = v;
                    best = drop;
                }
            }
        }
        if (pu == -1) break;
        // d(w) += d(pu) for every other w hitting pv, then drop the pair.
        std::vector<int> sources(in[pv].begin(), in[pv].end());
        for (int w : sources) {
            if (w == pu) continue;
            for (int t : out[pu]) {
                if (out[w].erase(t))
                    in[t].erase(w);
                else {
                    out[w].insert(t);
                    in[t].insert(w);
                }
            }
        }
        alive[pu] = alive[pv] = false;
        for (int t : out[pu]) in[t].erase(pu);
        for (int s : in[pu]) out[s].erase(pu);
        for (int t : out[pv]) in[t].erase(pv);
        for (int s : in[pv]) out[s].erase(pv);
        out[pu].clear(), in[pu].clear(), out[pv].clear(), in[pv].clear();
    }
    if (!in[x0].empty()) return 1;
    if (!out[x0].empty()) return -1;
    return 0;
}

int a1(const BifilteredComplex& c) {
    SimplifiedBasis sb = simplify_fully(c.is_reduced() ? c : cancel_zero_arrows(c));
    for (const Arrow& a : sb.complex.arrows()) {
        if (sb.complex.classify(a) != ArrowKind::Horizontal) continue;
        if (a.to == sb.distinguished) return a.upower;
        if (a.from == sb.distinguished)
            throw NotStandardError(
                "a1: the distinguished generator has an outgoing horizontal arrow; "
                "use epsilon's general path");
    }
    return 0;
}

std::optional<int> epsilon_from_a1(int aK, int aJ) {
    if (aJ > aK) return 1;
    return std::nullopt;  // the cited rule gives only this direction
}

Rational max_slope(const PLFunction& f) { return f.max_slope(); }

}  // namespace knotcalc
