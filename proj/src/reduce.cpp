#include "knotcalc/reduce.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

constexpr int kMaxSimplifyRounds = 64;

}  // namespace

/// Mutable working copy of a complex supporting filtered basis changes
/// and Gaussian cancellation. All public operations of the reduce module
/// are thin wrappers around this engine.
class SimplifyEngine {
public:
    explicit SimplifyEngine(const BifilteredComplex& c) : gens_(c.generators()) {
        out_.resize(gens_.size());
        in_.resize(gens_.size());
        alive_.assign(gens_.size(), true);
        deg_v_.assign(gens_.size(), 0);
        deg_h_.assign(gens_.size(), 0);
        for (const auto& [key, power] : c.arrows_) toggle(key.first, key.second, power);
    }

    BifilteredComplex to_complex() const {
        std::vector<Generator> gens;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (alive_[i]) gens.push_back(gens_[i]);
        std::vector<Arrow> arrows;
        for (std::size_t u = 0; u < gens_.size(); ++u) {
            if (!alive_[u]) continue;
            for (const auto& [v, power] : out_[u])
                arrows.push_back(Arrow{gens_[u].name, gens_[v].name, power});
        }
        return BifilteredComplex(std::move(gens), std::move(arrows));
    }

    // ---- basis changes ------------------------------------------------

    /// True when b <- b + U^k c is a legal filtered change: k pinned by
    /// the gradings must be a nonnegative integer and both filtration
    /// coordinates of U^k c must be <= those of b.
    bool legal_change(int b, int c) const {
        if (b == c || !alive_[b] || !alive_[c]) return false;
        int diff = gens_[c].maslov - gens_[b].maslov;
        if (diff % 2 != 0 || diff < 0) return false;              // i-coordinate
        return gens_[c].alexander - diff / 2 <= gens_[b].alexander;  // j-coordinate
    }

    /// b <- b + U^k c where k is pinned by the gradings; returns false
    /// (and does nothing) when the change is not legal. The adjacency
    /// maps iterated below are never the ones being toggled: a self-arrow
    /// b -> b is impossible (it would need an odd Maslov drop of 0), and
    /// every other aliasing case would require b == c.
    bool basis_change(int b, int c) {
        if (!legal_change(b, c)) return false;
        int k = (gens_[c].maslov - gens_[b].maslov) / 2;
        // Column update: d(b) += U^k d(c).
        for (const auto& [v, m] : out_[c]) toggle(b, v, m + k);
        // Row update: every u with d(u) containing U^m b gains U^{m+k} c.
        for (const auto& [u, m] : in_[b]) toggle(u, c, m + k);
        return true;
    }

    // ---- cancellation (removes the pair from the complex) -------------

    /// Cancels the arrow y -> x (a unit over F2[U,U^-1]): remaining
    /// differentials gain the correction terms, then x and y are removed.
    void cancel_pair(int y, int x) {
        int n = out_[y].at(x);
        auto incoming = in_[x];   // copies: toggling mutates the adjacency
        auto outgoing = out_[y];
        for (const auto& [z, m] : incoming) {
            if (z == y) continue;
            for (const auto& [w, p] : outgoing)
                if (w != x) toggle(z, w, m - n + p);
        }
        erase_generator(x);
        erase_generator(y);
    }

    // ---- queries -------------------------------------------------------

    ArrowKind classify(int u, int v, int power) const {
        if (power == 0) {
            if (gens_[v].alexander < gens_[u].alexander) return ArrowKind::Vertical;
            if (gens_[v].alexander == gens_[u].alexander) return ArrowKind::ZeroZero;
            return ArrowKind::Diagonal;
        }
        if (gens_[v].alexander - power == gens_[u].alexander) return ArrowKind::Horizontal;
        return ArrowKind::Diagonal;
    }

    int dir_length(int u, int v, int power, ArrowKind dir) const {
        return dir == ArrowKind::Vertical ? gens_[u].alexander - gens_[v].alexander : power;
    }

    std::vector<std::tuple<int, int, int>> arrows_of_kind(ArrowKind dir) const {
        std::vector<std::tuple<int, int, int>> list;
        for (std::size_t u = 0; u < gens_.size(); ++u) {
            if (!alive_[u]) continue;
            for (const auto& [v, power] : out_[u])
                if (classify(static_cast<int>(u), v, power) == dir)
                    list.push_back({static_cast<int>(u), v, power});
        }
        return list;
    }

    // ---- matching ------------------------------------------------------

    /// Filtered change of basis until the arrows of the given direction
    /// form a perfect matching on a subset of the generators. Returns the
    /// matched pairs; unpaired generators have no arrow of this kind.
    std::vector<Pairing> match_direction(ArrowKind dir) {
        for (int round = 0; round < kMaxSimplifyRounds; ++round) {
            // Re-derive the pairing state from the actual arrow set, so a
            // pair disturbed by a later basis change is simply redone.
            std::vector<int> pair_of = stable_pairs(dir);
            if (matching_complete(dir, pair_of)) return pairings(dir);
            // Pair off arrows whose endpoints are both unpaired,
            // shortest-first, ties broken by generator name order.
            while (true) {
                int best_u = -1, best_v = -1, best_len = 0;
                for (const auto& [u, v, power] : arrows_of_kind(dir)) {
                    if (pair_of[u] != -1 || pair_of[v] != -1) continue;
                    int len = dir_length(u, v, power, dir);
                    if (best_u == -1 ||
                        std::tuple(len, gens_[u].name, gens_[v].name) <
                            std::tuple(best_len, gens_[best_u].name, gens_[best_v].name)) {
                        best_u = u;
                        best_v = v;
                        best_len = len;
                    }
                }
                if (best_u == -1) break;
                lock_pair(dir, best_u, best_v, pair_of);
                pair_of[best_u] = best_v;
                pair_of[best_v] = best_u;
            }
            // Clear stray arrows that touch paired generators; give up
            // when a full pass clears nothing or too many passes ran (a
            // clearing move may itself create new strays).
            const int clear_limit = static_cast<int>(gens_.size()) * 8 + 64;
            for (int pass = 0;; ++pass) {
                if (pass > clear_limit) {
                    if (std::getenv("KNOTCALC_DEBUG")) {
                        std::fprintf(stderr, "[debug] stray clearing limit hit\n");
                        dump(dir);
                    }
                    throw SimplifyError("stray clearing did not converge");
                }
                bool cleared = false;
                bool any_stray = false;
                for (const auto& [u, v, power] : arrows_of_kind(dir)) {
                    if (pair_of[u] == v) continue;
                    any_stray = true;
                    if (clear_stray(dir, u, v, pair_of)) {
                        cleared = true;
                        break;  // adjacency changed; rescan
                    }
                }
                if (!any_stray) break;
                if (!cleared) throw SimplifyError("basis simplification did not converge");
            }
        }
        throw SimplifyError("basis simplification exceeded the round limit");
    }

    /// Matches `dir` while leaving the already-perfect `keep` arrows
    /// untouched: greedy descent on the conflict count over guarded
    /// moves, with a seen-state set so conflict-neutral moves cannot
    /// cycle.
    std::vector<Pairing> match_protected(ArrowKind dir, ArrowKind keep) {
        std::set<std::size_t> seen{state_hash()};
        const int iter_limit = 256 + static_cast<int>(gens_.size()) * 64;
        for (int iter = 0; iter < iter_limit; ++iter) {
            int phi = conflicts(dir);
            if (phi == 0) return pairings(dir);
            // Escalating tiers: targeted moves that strictly improve, then
            // conflict-neutral ones to unseen states, then every legal
            // pair, and finally uphill moves to unseen states.
            bool applied = false;
            for (int tier = 0; tier < 4 && !applied; ++tier) {
                std::vector<std::pair<int, int>> moves =
                    tier < 2 ? candidate_moves(dir) : all_moves();
                for (const auto& [b, c] : moves) {
                    if (!legal_change(b, c)) continue;
                    auto log = protected_try(b, c, keep);
                    if (!log) continue;
                    int now = conflicts(dir);
                    bool accept = false;
                    if (tier == 0 || tier == 2)
                        accept = now < phi;
                    else if (tier == 1)
                        accept = now == phi && !seen.count(state_hash());
                    else
                        accept = !seen.count(state_hash());
                    if (accept) {
                        seen.insert(state_hash());
                        applied = true;
                        break;
                    }
                    undo_moves(*log);
                }
            }
            if (!applied) throw SimplifyError("protected matching is stuck");
        }
        throw SimplifyError("protected matching exceeded the iteration limit");
    }

    const std::vector<Generator>& gens() const { return gens_; }
    bool alive(int i) const { return alive_[i]; }
    const std::map<int, int>& out(int i) const { return out_[i]; }
    const std::map<int, int>& in(int i) const { return in_[i]; }

    /// With both matchings already perfect, disconnects the component of
    /// x0 in the vertical/horizontal arrow graph from the rest: greedily
    /// applies basis changes that toggle diagonal arrows only (leaving
    /// both matchings intact) while strictly reducing the number of
    /// diagonal arrows crossing the component boundary. Gives up silently
    /// when no such move exists; the caller re-checks the split.
    void detach_box(int x0) {
        std::vector<bool> box = reachable_without_diagonals(x0);
        auto crossing = [&] {
            int count = 0;
            for (std::size_t u = 0; u < gens_.size(); ++u) {
                if (!alive_[u]) continue;
                for (const auto& [v, power] : out_[u])
                    if (classify(static_cast<int>(u), v, power) == ArrowKind::Diagonal &&
                        box[u] != box[v])
                        ++count;
            }
            return count;
        };
        for (int current = crossing(); current > 0;) {
            bool improved = false;
            for (std::size_t b = 0; b < gens_.size() && !improved; ++b) {
                if (!alive_[b]) continue;
                for (std::size_t c = 0; c < gens_.size(); ++c) {
                    if (b == c || !alive_[c]) continue;
                    if (!toggles_only_diagonals(static_cast<int>(b), static_cast<int>(c)))
                        continue;
                    if (!basis_change(static_cast<int>(b), static_cast<int>(c))) continue;
                    int now = crossing();
                    if (now < current) {
                        current = now;
                        improved = true;
                        break;
                    }
                    // Undo: the same change is an involution over F2.
                    basis_change(static_cast<int>(b), static_cast<int>(c));
                }
            }
            if (!improved) return;
        }
    }

private:
    /// Component of x0 in the arrow graph with diagonal arrows removed.
    std::vector<bool> reachable_without_diagonals(int x0) const {
        std::vector<bool> seen(gens_.size(), false);
        std::vector<int> stack{x0};
        seen[x0] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto visit = [&](int v, int power, bool forward) {
                int src = forward ? u : v, tgt = forward ? v : u;
                if (classify(src, tgt, power) == ArrowKind::Diagonal) return;
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            };
            for (const auto& [v, power] : out_[u]) visit(v, power, true);
            for (const auto& [v, power] : in_[u]) visit(v, power, false);
        }
        return seen;
    }

    /// True when the basis change b <- b + U^k c would only toggle
    /// diagonal arrows, so both matchings survive it untouched.
    bool toggles_only_diagonals(int b, int c) const {
        int diff = gens_[c].maslov - gens_[b].maslov;
        if (diff % 2 != 0 || diff / 2 < 0) return false;
        int k = diff / 2;
        for (const auto& [v, m] : out_[c])
            if (classify(b, v, m + k) != ArrowKind::Diagonal) return false;
        for (const auto& [u, m] : in_[b])
            if (classify(u, c, m + k) != ArrowKind::Diagonal) return false;
        return true;
    }

    void dump(ArrowKind dir) const {
        for (std::size_t u = 0; u < gens_.size(); ++u) {
            if (!alive_[u]) continue;
            for (const auto& [v, power] : out_[u]) {
                ArrowKind k = classify(static_cast<int>(u), v, power);
                char tag = k == ArrowKind::Vertical ? 'V'
                           : k == ArrowKind::Horizontal ? 'H'
                           : k == ArrowKind::Diagonal ? 'D' : 'Z';
                if (k == dir || k != ArrowKind::Diagonal)
                    std::fprintf(stderr, "  %s(%d,%d) -> U^%d %s(%d,%d) [%c]\n",
                                 gens_[u].name.c_str(), gens_[u].maslov, gens_[u].alexander,
                                 power, gens_[v].name.c_str(), gens_[v].maslov,
                                 gens_[v].alexander, tag);
            }
        }
    }

    /// Excess incidences of direction arrows: zero exactly when they form
    /// a perfect matching. Maintained incrementally by toggle().
    int conflicts(ArrowKind dir) const {
        return dir == ArrowKind::Vertical ? conflict_v_ : conflict_h_;
    }

    std::size_t state_hash() const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](std::size_t x) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (std::size_t u = 0; u < gens_.size(); ++u) {
            if (!alive_[u]) continue;
            for (const auto& [v, power] : out_[u]) {
                mix(u);
                mix(static_cast<std::size_t>(v) * 2654435761ull);
                mix(static_cast<std::size_t>(power + 1024));
            }
        }
        return h;
    }

    /// Single basis changes that remove some conflicting direction arrow:
    /// for each arrow u -> v at an over-occupied endpoint, the changes
    /// toggling u -> v itself (u <- u + U^k s for s feeding v, t <- t +
    /// U^k v for t receiving u) and the changes removing a competitor
    /// while re-routing the matching through u -> v (pairs of sources
    /// into v, pairs of targets of u).
    std::vector<std::pair<int, int>> candidate_moves(ArrowKind dir) const {
        std::vector<int> degree(gens_.size(), 0);
        auto arrows = arrows_of_kind(dir);
        for (const auto& [u, v, power] : arrows) {
            ++degree[u];
            ++degree[v];
        }
        std::set<std::pair<int, int>> moves;
        auto add = [&](int b, int c) {
            if (legal_change(b, c)) moves.insert({b, c});
        };
        for (const auto& [u, v, power] : arrows) {
            if (degree[u] < 2 && degree[v] < 2) continue;
            for (const auto& [s, q] : in_[v])
                if (s != u) {
                    add(u, s);
                    add(s, u);
                }
            for (const auto& [t, q] : out_[u])
                if (t != v) {
                    add(t, v);
                    add(v, t);
                }
            for (const auto& [s1, q1] : in_[v])
                for (const auto& [s2, q2] : in_[v])
                    if (s1 != s2) add(s1, s2);
            for (const auto& [t1, q1] : out_[u])
                for (const auto& [t2, q2] : out_[u])
                    if (t1 != t2) add(t1, t2);
        }
        return {moves.begin(), moves.end()};
    }

    std::vector<std::pair<int, int>> all_moves() const {
        std::vector<std::pair<int, int>> moves;
        for (std::size_t b = 0; b < gens_.size(); ++b) {
            if (!alive_[b]) continue;
            for (std::size_t c = 0; c < gens_.size(); ++c)
                if (legal_change(static_cast<int>(b), static_cast<int>(c)))
                    moves.push_back({static_cast<int>(b), static_cast<int>(c)});
        }
        return moves;
    }

    /// b <- b + U^k c restricted to moves that leave the `keep` arrows
    /// untouched. When the plain change disturbs them, repair moves are
    /// searched greedily: any legal change toggling a disturbed arrow is
    /// kept if it strictly shrinks the disturbance (adding c to b toggles
    /// the pair arrow into c's partner, and adding the partners toggles
    /// it back is the depth-one case). Returns the applied move log, or
    /// nothing after undoing everything: a basis change is an involution
    /// over F2, so the log replayed backwards is an exact undo.
    std::optional<std::vector<std::pair<int, int>>> protected_try(int b, int c, ArrowKind keep) {
        // The disturbed keep-arrows, maintained incrementally from the
        // toggles each basis change performs.
        std::set<std::pair<int, int>> diff;
        std::vector<std::tuple<int, int, int>> toggles;
        auto tracked_change = [&](int mb, int mc) {
            toggles.clear();
            toggle_log_ = &toggles;
            bool ok = basis_change(mb, mc);
            toggle_log_ = nullptr;
            if (!ok) return false;
            for (const auto& [u, v, power] : toggles)
                if (classify(u, v, power) == keep) {
                    std::pair<int, int> key{u, v};
                    if (!diff.erase(key)) diff.insert(key);
                }
            return true;
        };
        std::vector<std::pair<int, int>> log;
        if (!tracked_change(b, c)) return std::nullopt;
        log.push_back({b, c});
        const int step_limit = static_cast<int>(gens_.size()) * 2 + 16;
        for (int step = 0; !diff.empty() && step < step_limit; ++step) {
            bool improved = false;
            std::vector<std::pair<int, int>> snapshot(diff.begin(), diff.end());
            for (const auto& [u, v] : snapshot) {
                // Every change toggling u -> v: u <- u + U^k s for s feeding
                // v, or t <- t + U^k v for t receiving u.
                std::vector<std::pair<int, int>> moves;
                for (const auto& [s, power] : in_[v])
                    if (s != u && legal_change(u, s)) moves.push_back({u, s});
                for (const auto& [t, power] : out_[u])
                    if (t != v && legal_change(t, v)) moves.push_back({t, v});
                std::size_t size_before = diff.size();
                for (const auto& [mb, mc] : moves) {
                    if (!tracked_change(mb, mc)) continue;
                    if (diff.size() < size_before) {
                        log.push_back({mb, mc});
                        improved = true;
                        break;
                    }
                    tracked_change(mb, mc);  // undo: same change, involution
                }
                if (improved) break;
            }
            if (!improved) break;
        }
        if (diff.empty()) return log;
        undo_moves(log);
        return std::nullopt;
    }

    void undo_moves(const std::vector<std::pair<int, int>>& log) {
        for (auto it = log.rbegin(); it != log.rend(); ++it) basis_change(it->first, it->second);
    }

    std::vector<Pairing> pairings(ArrowKind dir) const {
        std::vector<Pairing> result;
        for (const auto& [u, v, power] : arrows_of_kind(dir))
            result.push_back(
                Pairing{gens_[u].name, gens_[v].name, dir, dir_length(u, v, power, dir)});
        std::sort(result.begin(), result.end(), [](const Pairing& a, const Pairing& b) {
            return std::tuple(a.length, a.source, a.target) <
                   std::tuple(b.length, b.source, b.target);
        });
        return result;
    }

    /// Pairs already realized by the arrow set: generators incident to
    /// exactly one direction arrow on both ends.
    std::vector<int> stable_pairs(ArrowKind dir) const {
        std::vector<int> degree(gens_.size(), 0);
        auto list = arrows_of_kind(dir);
        for (const auto& [u, v, power] : list) {
            ++degree[u];
            ++degree[v];
        }
        std::vector<int> pair_of(gens_.size(), -1);
        for (const auto& [u, v, power] : list)
            if (degree[u] == 1 && degree[v] == 1) {
                pair_of[u] = v;
                pair_of[v] = u;
            }
        return pair_of;
    }

    bool matching_complete(ArrowKind dir, const std::vector<int>& pair_of) const {
        for (const auto& [u, v, power] : arrows_of_kind(dir))
            if (pair_of[u] != v) return false;
        return true;
    }

    void toggle(int u, int v, int power) {
        if (toggle_log_) toggle_log_->push_back({u, v, power});
        bool added;
        auto it = out_[u].find(v);
        if (it != out_[u].end()) {
            if (it->second != power)
                throw Error("internal: inconsistent U-power between a generator pair");
            out_[u].erase(it);
            in_[v].erase(u);
            added = false;
        } else {
            out_[u][v] = power;
            in_[v][u] = power;
            added = true;
        }
        // Keep the per-direction degrees and conflict totals current.
        ArrowKind kind = classify(u, v, power);
        std::vector<int>* deg = kind == ArrowKind::Vertical ? &deg_v_
                                : kind == ArrowKind::Horizontal ? &deg_h_ : nullptr;
        if (!deg) return;
        int& total = kind == ArrowKind::Vertical ? conflict_v_ : conflict_h_;
        for (int g : {u, v}) {
            int before = (*deg)[g];
            int after = before + (added ? 1 : -1);
            (*deg)[g] = after;
            total += std::max(after - 1, 0) - std::max(before - 1, 0);
        }
    }

    void erase_generator(int i) {
        auto outgoing = out_[i];
        for (const auto& [v, power] : outgoing) toggle(i, v, power);
        auto incoming = in_[i];
        for (const auto& [u, power] : incoming) toggle(u, i, power);
        alive_[i] = false;
    }

    /// Establishes d_dir(y) = x and in_dir(x) = {y} via filtered basis
    /// changes (the standard zig-zag clearing; each option is attempted
    /// in a fixed order and legality is re-checked by basis_change).
    void lock_pair(ArrowKind dir, int y, int x, const std::vector<int>& pair_of) {
        const int guard_limit = static_cast<int>(gens_.size()) * 4 + 64;
        // Extra targets of y.
        for (int guard = 0; guard < guard_limit; ++guard) {
            int w = -1;
            for (const auto& [v, power] : out_[y])
                if (v != x && classify(y, v, power) == dir && (w == -1 || gens_[v].name < gens_[w].name))
                    w = v;
            if (w == -1) break;
            if (basis_change(x, w)) continue;
            // w may be the target of an already locked pair (s -> w).
            int s = paired_source_of(w, dir, pair_of);
            if (s != -1 && basis_change(y, s)) continue;
            throw SimplifyError("no legal basis change clears d(" + gens_[y].name + ")");
        }
        // Extra sources into x.
        for (int guard = 0; guard < guard_limit; ++guard) {
            int z = -1;
            for (const auto& [u, power] : in_[x])
                if (u != y && classify(u, x, power) == dir && (z == -1 || gens_[u].name < gens_[z].name))
                    z = u;
            if (z == -1) break;
            if (basis_change(z, y)) continue;
            int t = paired_target_of(z, dir, pair_of);
            if (t != -1 && basis_change(t, x)) continue;
            throw SimplifyError("no legal basis change clears arrows into " + gens_[x].name);
        }
    }

    /// Removes a direction arrow u -> v that is not a matched pair, using
    /// the locked pairs at its endpoints.
    bool clear_stray(ArrowKind dir, int u, int v, const std::vector<int>& pair_of) {
        int s = paired_source_of(v, dir, pair_of);
        if (s != -1 && s != u && basis_change(u, s)) return true;
        int t = paired_target_of(u, dir, pair_of);
        if (t != -1 && t != v && basis_change(t, v)) return true;
        return false;
    }

    int paired_source_of(int v, ArrowKind dir, const std::vector<int>& pair_of) const {
        int s = pair_of[v];
        if (s != -1 && pair_of[s] == v && out_[s].count(v)) return s;
        return -1;
    }

    int paired_target_of(int u, ArrowKind dir, const std::vector<int>& pair_of) const {
        int t = pair_of[u];
        if (t != -1 && pair_of[t] == u && out_[u].count(t)) return t;
        return -1;
    }

    std::vector<Generator> gens_;
    std::vector<std::map<int, int>> out_, in_;
    std::vector<char> alive_;
    std::vector<int> deg_v_, deg_h_;
    int conflict_v_ = 0, conflict_h_ = 0;
    std::vector<std::tuple<int, int, int>>* toggle_log_ = nullptr;
};

BifilteredComplex cancel_zero_arrows(const BifilteredComplex& c) {
    SimplifyEngine engine(c);
    while (true) {
        int best_y = -1, best_x = -1;
        for (std::size_t u = 0; u < engine.gens().size(); ++u) {
            if (!engine.alive(static_cast<int>(u))) continue;
            for (const auto& [v, power] : engine.out(static_cast<int>(u))) {
                if (engine.classify(static_cast<int>(u), v, power) != ArrowKind::ZeroZero) continue;
                if (best_y == -1 ||
                    std::pair(engine.gens()[u].name, engine.gens()[v].name) <
                        std::pair(engine.gens()[best_y].name, engine.gens()[best_x].name)) {
                    best_y = static_cast<int>(u);
                    best_x = v;
                }
            }
        }
        if (best_y == -1) break;
        engine.cancel_pair(best_y, best_x);
    }
    return engine.to_complex();
}

std::vector<BifilteredComplex> split_components(const BifilteredComplex& c) {
    const auto& gens = c.generators();
    std::vector<int> parent(gens.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (const Arrow& a : c.arrows()) {
        int u = find(c.index_of(a.from));
        int v = find(c.index_of(a.to));
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
    std::map<int, std::vector<int>> groups;  // root -> member indices
    for (std::size_t i = 0; i < gens.size(); ++i)
        groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

    std::vector<BifilteredComplex> components;
    for (const auto& [root, members] : groups) {
        std::set<std::string> names;
        std::vector<Generator> part;
        for (int i : members) {
            part.push_back(gens[i]);
            names.insert(gens[i].name);
        }
        std::vector<Arrow> arrows;
        for (const Arrow& a : c.arrows())
            if (names.count(a.from)) arrows.push_back(a);
        components.push_back(BifilteredComplex(std::move(part), std::move(arrows)));
    }
    return components;
}

GlobalHomology check_global_homology(const BifilteredComplex& c) {
    // Over F2[U,U^-1] every differential entry is a unit monomial (the
    // grading law pins the power of the arrow between any generator
    // pair), so homology is computed by plain graph cancellation.
    std::size_t n = c.size();
    std::vector<std::set<int>> out(n), in(n);
    std::vector<bool> alive(n, true);
    for (const Arrow& a : c.arrows()) {
        out[c.index_of(a.from)].insert(c.index_of(a.to));
        in[c.index_of(a.to)].insert(c.index_of(a.from));
    }
    auto toggle = [&](int u, int v) {
        if (out[u].count(v)) {
            out[u].erase(v);
            in[v].erase(u);
        } else {
            out[u].insert(v);
            in[v].insert(u);
        }
    };
    while (true) {
        int y = -1, x = -1;
        for (std::size_t u = 0; u < n && y == -1; ++u)
            if (alive[u] && !out[u].empty()) {
                y = static_cast<int>(u);
                x = *out[u].begin();
            }
        if (y == -1) break;
        std::vector<int> incoming(in[x].begin(), in[x].end());
        std::vector<int> outgoing(out[y].begin(), out[y].end());
        for (int z : incoming) {
            if (z == y) continue;
            for (int w : outgoing)
                if (w != x) toggle(z, w);
        }
        for (int v : std::vector<int>(out[x].begin(), out[x].end())) toggle(x, v);
        for (int u : std::vector<int>(in[x].begin(), in[x].end())) toggle(u, x);
        for (int v : std::vector<int>(out[y].begin(), out[y].end())) toggle(y, v);
        for (int u : std::vector<int>(in[y].begin(), in[y].end())) toggle(u, y);
        alive[x] = alive[y] = false;
    }
    GlobalHomology result;
    std::vector<int> survivors;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) survivors.push_back(static_cast<int>(i));
    result.rank = static_cast<int>(survivors.size());
    if (survivors.empty()) {
        result.kind = GlobalHomology::Kind::Acyclic;
    } else if (survivors.size() == 1) {
        result.kind = GlobalHomology::Kind::RankOne;
        result.grading = ((c.gen(survivors[0]).maslov % 2) + 2) % 2;
    } else {
        result.kind = GlobalHomology::Kind::Other;
    }
    return result;
}

namespace {

void require_reduced(const BifilteredComplex& c, const char* op) {
    if (!c.is_reduced())
        throw ArgumentError(std::string(op) + " requires a reduced complex (no (0,0)-arrows)");
}

/// The unique generator with no incident arrow of the given kind; -1 when
/// the count differs from expected.
std::vector<int> unmatched_generators(const BifilteredComplex& c, ArrowKind dir) {
    std::vector<bool> touched(c.size(), false);
    for (const Arrow& a : c.arrows()) {
        if (c.classify(a) != dir) continue;
        touched[c.index_of(a.from)] = true;
        touched[c.index_of(a.to)] = true;
    }
    std::vector<int> free_gens;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!touched[i]) free_gens.push_back(static_cast<int>(i));
    return free_gens;
}

/// Checks that arrows of the given kind form a perfect matching (every
/// generator incident to at most one of them).
bool is_perfect_matching(const BifilteredComplex& c, ArrowKind dir) {
    std::vector<int> degree(c.size(), 0);
    for (const Arrow& a : c.arrows()) {
        if (c.classify(a) != dir) continue;
        if (++degree[c.index_of(a.from)] > 1) return false;
        if (++degree[c.index_of(a.to)] > 1) return false;
    }
    return true;
}

std::string distinguished_of(const BifilteredComplex& c) {
    std::vector<int> free_gens = unmatched_generators(c, ArrowKind::Vertical);
    if (free_gens.size() != 1)
        throw NotKnotComplexError("vertical homology not rank 1 (found " +
                                  std::to_string(free_gens.size()) + " unpaired generators)");
    const Generator& x0 = c.gen(free_gens[0]);
    if (x0.maslov != 0)
        throw NotKnotComplexError("vertical homology generator has Maslov grading " +
                                  std::to_string(x0.maslov) + ", expected 0");
    return x0.name;
}

}  // namespace

SimplifiedBasis vertically_simplify(const BifilteredComplex& c) {
    require_reduced(c, "vertically_simplify");
    SimplifyEngine engine(c);
    std::vector<Pairing> pairs = engine.match_direction(ArrowKind::Vertical);
    BifilteredComplex simplified = engine.to_complex();
    if (!is_perfect_matching(simplified, ArrowKind::Vertical))
        throw SimplifyError("vertical matching postcondition failed");
    return SimplifiedBasis{simplified, distinguished_of(simplified), std::move(pairs)};
}

SimplifiedBasis simplify_fully(const BifilteredComplex& c) {
    require_reduced(c, "simplify_fully");
    // Preferred scheme: match one direction, then match the other with
    // moves that keep the first one intact, so one round suffices. Either
    // order can get stuck, so both are attempted.
    for (ArrowKind first : {ArrowKind::Vertical, ArrowKind::Horizontal}) {
        ArrowKind second =
            first == ArrowKind::Vertical ? ArrowKind::Horizontal : ArrowKind::Vertical;
        try {
            SimplifyEngine engine(c);
            std::vector<Pairing> pairs = engine.match_direction(first);
            std::vector<Pairing> rest = engine.match_protected(second, first);
            BifilteredComplex current = engine.to_complex();
            if (is_perfect_matching(current, ArrowKind::Vertical) &&
                is_perfect_matching(current, ArrowKind::Horizontal)) {
                pairs.insert(pairs.end(), rest.begin(), rest.end());
                return SimplifiedBasis{current, distinguished_of(current), std::move(pairs)};
            }
        } catch (const SimplifyError& err) {
            // Try the other order, then the unprotected alternation below.
            if (std::getenv("KNOTCALC_DEBUG"))
                std::fprintf(stderr, "[debug] protected scheme (%s first): %s\n",
                             first == ArrowKind::Vertical ? "V" : "H", err.what());
        }
    }
    SimplifyEngine engine(c);
    std::vector<Pairing> vertical, horizontal;
    for (int round = 0; round < kMaxSimplifyRounds; ++round) {
        vertical = engine.match_direction(ArrowKind::Vertical);
        horizontal = engine.match_direction(ArrowKind::Horizontal);
        BifilteredComplex current = engine.to_complex();
        if (is_perfect_matching(current, ArrowKind::Vertical) &&
            is_perfect_matching(current, ArrowKind::Horizontal)) {
            std::vector<Pairing> pairs = std::move(vertical);
            pairs.insert(pairs.end(), horizontal.begin(), horizontal.end());
            return SimplifiedBasis{current, distinguished_of(current), std::move(pairs)};
        }
    }
    throw SimplifyError("vertical and horizontal simplification did not stabilize");
}

std::optional<StandardForm> standard_form(const BifilteredComplex& c) {
    SimplifiedBasis sb = simplify_fully(c);
    const BifilteredComplex& s = sb.complex;

    auto dir_arrows_into = [&](const std::string& name, ArrowKind dir) {
        std::vector<Arrow> list;
        for (const Arrow& a : s.arrows())
            if (a.to == name && s.classify(a) == dir) list.push_back(a);
        return list;
    };
    auto dir_arrows_from = [&](const std::string& name, ArrowKind dir) {
        std::vector<Arrow> list;
        for (const Arrow& a : s.arrows())
            if (a.from == name && s.classify(a) == dir) list.push_back(a);
        return list;
    };

    StandardForm form;
    std::string cur = sb.distinguished;
    std::set<std::string> visited{cur};
    while (s.gen(cur).alexander != 0) {
        // Horizontal step: the unique incoming horizontal arrow.
        auto horiz_in = dir_arrows_into(cur, ArrowKind::Horizontal);
        if (horiz_in.size() != 1 || !dir_arrows_from(cur, ArrowKind::Horizontal).empty())
            return std::nullopt;
        form.lengths.push_back(horiz_in[0].upower);
        cur = horiz_in[0].from;
        if (!visited.insert(cur).second) return std::nullopt;
        if (s.gen(cur).alexander == 0) break;
        // Vertical step: the vertical pairing of that source.
        auto vert_out = dir_arrows_from(cur, ArrowKind::Vertical);
        if (vert_out.size() != 1) return std::nullopt;
        form.lengths.push_back(s.gen(cur).alexander - s.gen(vert_out[0].to).alexander);
        cur = vert_out[0].to;
        if (!visited.insert(cur).second) return std::nullopt;
    }
    return form;
}

BifilteredComplex homology_component(const BifilteredComplex& c) {
    if (c.size() > kHomologyComponentCap)
        throw CapExceededError("homology_component: complex too large to simplify");
    SimplifiedBasis sb = simplify_fully(c);
    {
        // Matched boxes can still be chained together by diagonal arrows;
        // detach the one holding x0 so it splits off as a summand.
        SimplifyEngine engine(sb.complex);
        engine.detach_box(sb.complex.index_of(sb.distinguished));
        sb.complex = engine.to_complex();
    }
    std::vector<BifilteredComplex> parts = split_components(sb.complex);
    const BifilteredComplex* carrier = nullptr;
    for (const BifilteredComplex& part : parts) {
        GlobalHomology h = check_global_homology(part);
        if (h.kind == GlobalHomology::Kind::RankOne) {
            if (carrier) throw NotKnotComplexError("multiple components carry global homology");
            carrier = &part;
        } else if (h.kind != GlobalHomology::Kind::Acyclic) {
            throw NotKnotComplexError("component with global homology of rank > 1");
        }
    }
    if (!carrier) throw NotKnotComplexError("no component carries the global homology");
    // The discarded components must be invisible to every invariant:
    // globally acyclic (checked above) and with no vertical/horizontal
    // homology. Both matchings are perfect on sb.complex and the single
    // unmatched element of each kind must live in the carrier.
    for (ArrowKind dir : {ArrowKind::Vertical, ArrowKind::Horizontal}) {
        for (int i : unmatched_generators(sb.complex, dir))
            if (!carrier->has_generator(sb.complex.gen(i).name))
                throw NotKnotComplexError("discarded component carries filtration homology");
    }
    return *carrier;
}

}  // namespace knotcalc
