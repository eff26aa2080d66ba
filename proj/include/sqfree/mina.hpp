#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/budget.hpp"
#include "sqfree/partition.hpp"
#include "sqfree/structure.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// Graph on the orbits of o(s) whose edges must receive distinct letters:
/// the orbits of the positions i_j are pairwise joined, and each orbit of
/// i_j is joined to the orbit of 2*i_j.
struct DifferenceGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // a < b, sorted, deduplicated
};

inline DifferenceGraph primary_difference_graph(const LengthSeq& s) {
    const SetPartition o = orbit_closure(s);
    std::set<std::pair<int, int>> es;
    auto join = [&](int pos_a, int pos_b) {
        const int a = o.block_of(pos_a);
        const int b = o.block_of(pos_b);
        if (a == b)
            throw std::domain_error("difference condition collapses inside one orbit");
        es.emplace(std::min(a, b), std::max(a, b));
    };
    const auto& lens = s.ascending();
    for (std::size_t x = 0; x < lens.size(); ++x) {
        join(lens[x], 2 * lens[x]);
        for (std::size_t y = x + 1; y < lens.size(); ++y) join(lens[x], lens[y]);
    }
    return DifferenceGraph{o.block_count(), {es.begin(), es.end()}};
}

/// Exact chromatic number by branch and bound with a greedy upper bound.
/// Isolated vertices cost nothing extra, so only edge-touched vertices branch.
inline int chromatic_number(const DifferenceGraph& g, int max_vertices = 24) {
    if (g.vertex_count > max_vertices)
        throw std::invalid_argument("graph too large for exact coloring");
    if (g.vertex_count == 0) return 0;
    if (g.edges.empty()) return 1;
    const int n = g.vertex_count;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // greedy upper bound in the same order
    int best = 0;
    for (int v : order) {
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int u : adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(u)] >= 0)
                used[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = true;
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        best = std::max(best, c + 1);
    }
    std::fill(color.begin(), color.end(), -1);
    std::function<void(std::size_t, int)> rec = [&](std::size_t at, int used_colors) {
        if (used_colors >= best) return;
        if (at == order.size()) {
            best = used_colors;
            return;
        }
        const int v = order[at];
        for (int c = 0; c <= used_colors && c < best; ++c) {
            if (c == used_colors && used_colors + 1 >= best) break;
            bool ok = true;
            for (int u : adj[static_cast<std::size_t>(v)])
                if (color[static_cast<std::size_t>(u)] == c) { ok = false; break; }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            rec(at + 1, std::max(used_colors, c + 1));
            color[static_cast<std::size_t>(v)] = -1;
        }
    };
    rec(0, 0);
    return best;
}

/// A coarsening of o(s) is a dead-end candidate when it is s-squarefree and
/// satisfies the primary difference conditions.
inline bool is_candidate(const SetPartition& p, const LengthSeq& s) {
    return primary_conditions_ok(p, s) && partition_is_s_squarefree(p, s);
}

/// Exact minimal alphabet size with the search evidence attached.
struct MinAResult {
    bool finite = false;
    int value = 0;  // meaningful when finite
    std::optional<SetPartition> witness;
    std::vector<bool> candidate_at_k;  // index k-1, for k = 1..k_max

    std::string value_string() const {
        return finite ? std::to_string(value) : std::string("infinity");
    }
};

/// Ground-truth minA(s) by direct search over coarsenings of o(s).
///
/// Merging blocks only coarsens the similarity relation, so a square or a
/// primary violation in o(s) itself persists in every coarsening; that case
/// is infinite without any search. Otherwise o(s) is its own candidate and
/// the least candidate block count exists; k is scanned upward, coarsenings
/// in canonical merge-pattern order, first witness kept. The per-k candidate
/// profile is reported for k = 1..k_max even past the first hit.
inline MinAResult minA_exact(const LengthSeq& s, int k_max = -1,
                             long long budget = default_budget()) {
    if (k_max < 0) k_max = s.rank_count() + 2;
    const SetPartition o = orbit_closure(s);
    MinAResult out;
    out.candidate_at_k.assign(static_cast<std::size_t>(k_max), false);
    if (!is_candidate(o, s)) return out;  // infinite: clause 1
    const int b = o.block_count();
    long long spent = 0;
    auto scan_k = [&](int k) -> std::optional<SetPartition> {
        std::optional<SetPartition> first;
        for_each_coarsening(o, k, [&](const SetPartition& q) {
            if (++spent > budget)
                throw BudgetExceeded("minA search exceeded budget of " +
                                     std::to_string(budget) + " coarsenings");
            if (is_candidate(q, s)) {
                first = q;
                return false;
            }
            return true;
        });
        return first;
    };
    for (int k = 1; k <= std::max(k_max, b) && k <= b; ++k) {
        const auto hit = scan_k(k);
        if (k <= k_max) out.candidate_at_k[static_cast<std::size_t>(k) - 1] = hit.has_value();
        if (hit && !out.finite) {
            out.finite = true;
            out.value = k;
            out.witness = hit;
        }
        if (out.finite && k >= k_max) break;
    }
    return out;
}

/// All concrete dead-end words over l letters reachable from the candidate
/// machinery.
///
/// Dead-ends can be sourced from a subsequence of s (the remaining lengths
/// just happen not to fire), so every subsequence containing the largest
/// length is searched: its candidates with at most l blocks are letter-
/// assigned in every injective way, and each resulting word is kept only if
/// it is s-squarefree and prepending any letter creates a square in s.
inline std::set<Word> dead_end_words_from(const LengthSeq& s, int l,
                                          long long budget = default_budget()) {
    if (l < 2) throw std::invalid_argument("alphabet must have at least 2 letters");
    if (s.rank_count() > 8)
        throw std::invalid_argument("subsequence search limited to r <= 8");
    std::set<Word> out;
    long long spent = 0;
    auto verify_and_insert = [&](const Word& w) {
        if (!is_s_squarefree(w, s)) return;
        for (Letter a = 0; a < l; ++a)
            if (!square_created_by_prepend(w, a, s)) return;
        out.insert(w);
    };
    auto letterings = [&](const SetPartition& p) {
        const int k = p.block_count();
        std::vector<Letter> letters(static_cast<std::size_t>(k));
        std::vector<bool> taken(static_cast<std::size_t>(l), false);
        std::function<void(int)> rec = [&](int blk) {
            if (blk == k) {
                verify_and_insert(word_of(p, letters));
                return;
            }
            for (Letter a = 0; a < l; ++a) {
                if (taken[static_cast<std::size_t>(a)]) continue;
                taken[static_cast<std::size_t>(a)] = true;
                letters[static_cast<std::size_t>(blk)] = a;
                rec(blk + 1);
                taken[static_cast<std::size_t>(a)] = false;
            }
        };
        rec(0);
    };
    // subsequences of the smaller lengths; the largest is always kept so the
    // ground set stays [N]
    const std::vector<int> rest(s.ascending().begin(), s.ascending().end() - 1);
    const std::size_t masks = std::size_t{1} << rest.size();
    for (std::size_t mask = 0; mask < masks; ++mask) {
        std::vector<int> sub;
        for (std::size_t x = 0; x < rest.size(); ++x)
            if (mask & (std::size_t{1} << x)) sub.push_back(rest[x]);
        sub.push_back(s.largest());
        const LengthSeq s_sub{std::move(sub)};
        const SetPartition o = orbit_closure(s_sub);
        if (!is_candidate(o, s_sub)) continue;
        for (int k = 1; k <= std::min(l, o.block_count()); ++k) {
            for_each_coarsening(o, k, [&](const SetPartition& q) {
                if (++spent > budget)
                    throw BudgetExceeded("dead-end search exceeded budget of " +
                                         std::to_string(budget) + " coarsenings");
                if (is_candidate(q, s_sub)) letterings(q);
                return true;
            });
        }
    }
    return out;
}

}  // namespace sqfree
