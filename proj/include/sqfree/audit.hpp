#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sqfree/graph.hpp"
#include "sqfree/mina.hpp"
#include "sqfree/partition.hpp"
#include "sqfree/structure.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// Calls fn for every strictly increasing sequence with at most r_max
/// lengths, all at most i1_max, in lexicographic order.
template <typename Fn>
void for_each_length_seq(int r_max, int i1_max, Fn&& fn) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (!cur.empty()) fn(LengthSeq(cur));
        if (static_cast<int>(cur.size()) == r_max) return;
        for (int i = from; i <= i1_max; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

/// One grid point of the dead-end prediction audit.
struct AuditRow {
    LengthSeq s;
    int l = 0;
    DeadEndVerdict predicted;
    std::size_t vertex_count = 0;
    std::size_t dead_end_count = 0;

    /// A decided verdict must match the brute-force count exactly.
    bool mismatch() const {
        switch (predicted.kind) {
            case DeadEndVerdict::Kind::NoDeadEnds: return dead_end_count != 0;
            case DeadEndVerdict::Kind::HasDeadEnds: return dead_end_count == 0;
            default: return false;
        }
    }
};

/// Brute-force check of the closed-form dead-end prediction over the grid
/// r <= r_max, i_1 <= i1_max, l in alphabet_sizes.
inline std::vector<AuditRow> theorem1_audit(int r_max, int i1_max,
                                            const std::vector<int>& alphabet_sizes,
                                            long long budget = default_budget()) {
    std::vector<AuditRow> rows;
    for_each_length_seq(r_max, i1_max, [&](const LengthSeq& s) {
        for (int l : alphabet_sizes) {
            AuditRow row{s, l, theorem1_predict(s, l), 0, 0};
            const AvoidanceGraph g(s, l, budget);
            row.vertex_count = g.vertex_count();
            row.dead_end_count = g.dead_ends().size();
            rows.push_back(std::move(row));
        }
    });
    return rows;
}

/// Structural checks on one built graph: reversal duality of dead-ends and
/// dead-starts, trim idempotence, and a seeded squarefree walk on the core.
/// Returns an empty string on success, else a description of the failure.
inline std::string check_graph_properties(const AvoidanceGraph& g, std::uint64_t walk_seed,
                                          std::size_t walk_steps) {
    const LengthSeq& s = g.lengths();
    std::vector<Word> ends = g.dead_ends();
    std::vector<Word> starts = g.dead_starts();
    for (Word& w : ends) w = reversed(w);
    std::sort(ends.begin(), ends.end());
    std::sort(starts.begin(), starts.end());
    if (ends != starts)
        return "dead_starts differ from reversed dead_ends for s=(" + s.to_string() + ")";
    const AvoidanceGraph core = g.pruned_core();
    const AvoidanceGraph again = core.pruned_core();
    if (again.vertex_count() != core.vertex_count())
        return "pruned core not idempotent for s=(" + s.to_string() + ")";
    if (core.vertex_count() > 0) {
        const Word stream = random_walk(core, walk_seed, walk_steps);
        if (!is_s_squarefree(stream, s))
            return "core walk emitted a square for s=(" + s.to_string() + ")";
    }
    return "";
}

}  // namespace sqfree
