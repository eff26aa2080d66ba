#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/budget.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// The shift digraph on all s-squarefree words of length N = 2*i_1 over l
/// letters, with an arc u -> v iff v = u_2 ... u_N a for some letter a.
///
/// In this orientation a dead-end (no letter can be PREPENDED without
/// creating a square) has in-degree 0 and a dead-start (no letter can be
/// appended) has out-degree 0; reversal maps one onto the other.
///
/// Vertices are stored as sorted base-l codes (first letter most
/// significant); arcs are implicit and resolved by binary search.
class AvoidanceGraph {
public:
    AvoidanceGraph(LengthSeq s, int l, long long budget = default_budget())
        : s_(std::move(s)), l_(l), n_(s_.window()) {
        if (l_ < 1) throw std::invalid_argument("alphabet size must be positive");
        double candidates = 1.0;
        for (int t = 0; t < n_; ++t) candidates *= l_;
        if (candidates > static_cast<double>(budget))
            throw BudgetExceeded("l^N = " + std::to_string(static_cast<long long>(candidates)) +
                                 " exceeds budget of " + std::to_string(budget));
        pow_.assign(static_cast<std::size_t>(n_) + 1, 1);
        for (int t = 1; t <= n_; ++t)
            pow_[static_cast<std::size_t>(t)] = pow_[static_cast<std::size_t>(t) - 1] *
                                                static_cast<std::uint64_t>(l_);
        enumerate_vertices();
    }

    const LengthSeq& lengths() const { return s_; }
    int alphabet_size() const { return l_; }
    int word_length() const { return n_; }
    std::size_t vertex_count() const { return codes_.size(); }

    Word word_at(std::size_t idx) const { return decode(codes_[idx]); }

    bool contains(const Word& w) const {
        return std::binary_search(codes_.begin(), codes_.end(), encode(w));
    }

    /// Out-neighbors: u_2 ... u_N a for each letter a that stays a vertex.
    std::vector<std::size_t> successors(std::size_t idx) const {
        std::vector<std::size_t> out;
        const std::uint64_t stem = (codes_[idx] % pow_[static_cast<std::size_t>(n_) - 1]) *
                                   static_cast<std::uint64_t>(l_);
        for (Letter a = 0; a < l_; ++a)
            if (auto at = index_of(stem + static_cast<std::uint64_t>(a))) out.push_back(*at);
        return out;
    }

    /// In-neighbors: a u_1 ... u_{N-1} for each letter a that stays a vertex.
    std::vector<std::size_t> predecessors(std::size_t idx) const {
        std::vector<std::size_t> out;
        const std::uint64_t stem = codes_[idx] / static_cast<std::uint64_t>(l_);
        for (Letter a = 0; a < l_; ++a) {
            const std::uint64_t code =
                static_cast<std::uint64_t>(a) * pow_[static_cast<std::size_t>(n_) - 1] + stem;
            if (auto at = index_of(code)) out.push_back(*at);
        }
        return out;
    }

    std::size_t arc_count() const {
        std::size_t total = 0;
        for (std::size_t v = 0; v < codes_.size(); ++v) total += successors(v).size();
        return total;
    }

    /// Vertices no letter can be prepended to (in-degree 0).
    std::vector<Word> dead_ends() const { return degree_zero(/*incoming=*/true); }

    /// Vertices no letter can be appended to (out-degree 0).
    std::vector<Word> dead_starts() const { return degree_zero(/*incoming=*/false); }

    /// Maximal induced subgraph with every in- and out-degree >= 1, obtained
    /// by trimming degree-0 vertices to a fixpoint. Idempotent.
    AvoidanceGraph pruned_core() const {
        std::vector<bool> alive(codes_.size(), true);
        std::vector<int> in_deg(codes_.size()), out_deg(codes_.size());
        std::vector<std::size_t> queue;
        for (std::size_t v = 0; v < codes_.size(); ++v) {
            in_deg[v] = static_cast<int>(predecessors(v).size());
            out_deg[v] = static_cast<int>(successors(v).size());
            if (in_deg[v] == 0 || out_deg[v] == 0) queue.push_back(v);
        }
        while (!queue.empty()) {
            const std::size_t v = queue.back();
            queue.pop_back();
            if (!alive[v]) continue;
            alive[v] = false;
            for (std::size_t u : predecessors(v))
                if (alive[u] && --out_deg[u] == 0) queue.push_back(u);
            for (std::size_t u : successors(v))
                if (alive[u] && --in_deg[u] == 0) queue.push_back(u);
        }
        std::vector<std::uint64_t> kept;
        for (std::size_t v = 0; v < codes_.size(); ++v)
            if (alive[v]) kept.push_back(codes_[v]);
        return AvoidanceGraph(s_, l_, n_, pow_, std::move(kept));
    }

    void write_dot(std::ostream& os) const {
        os << "digraph shift {\n";
        for (std::size_t v = 0; v < codes_.size(); ++v)
            os << "  \"" << letters_of(word_at(v)) << "\";\n";
        for (std::size_t v = 0; v < codes_.size(); ++v)
            for (std::size_t u : successors(v))
                os << "  \"" << letters_of(word_at(v)) << "\" -> \"" << letters_of(word_at(u))
                   << "\";\n";
        os << "}\n";
    }

private:
    AvoidanceGraph(LengthSeq s, int l, int n, std::vector<std::uint64_t> pow,
                   std::vector<std::uint64_t> codes)
        : s_(std::move(s)), l_(l), n_(n), pow_(std::move(pow)), codes_(std::move(codes)) {}

    std::uint64_t encode(const Word& w) const {
        if (static_cast<int>(w.size()) != n_)
            throw std::invalid_argument("vertex words must have length N");
        std::uint64_t code = 0;
        for (Letter x : w) {
            if (x < 0 || x >= l_) throw std::invalid_argument("letter outside alphabet");
            code = code * static_cast<std::uint64_t>(l_) + static_cast<std::uint64_t>(x);
        }
        return code;
    }

    Word decode(std::uint64_t code) const {
        Word w(static_cast<std::size_t>(n_));
        for (int t = n_ - 1; t >= 0; --t) {
            w[static_cast<std::size_t>(t)] = static_cast<Letter>(code % l_);
            code /= static_cast<std::uint64_t>(l_);
        }
        return w;
    }

    std::optional<std::size_t> index_of(std::uint64_t code) const {
        const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
        if (it == codes_.end() || *it != code) return std::nullopt;
        return static_cast<std::size_t>(it - codes_.begin());
    }

    /// DFS over squarefree prefixes; non-squarefree words are never extended,
    /// and lexicographic letter order makes the code list come out sorted.
    void enumerate_vertices() {
        Word prefix;
        prefix.reserve(static_cast<std::size_t>(n_));
        std::function<void()> rec = [&]() {
            if (static_cast<int>(prefix.size()) == n_) {
                codes_.push_back(encode(prefix));
                return;
            }
            for (Letter a = 0; a < l_; ++a) {
                if (square_created_by_append(prefix, a, s_)) continue;
                prefix.push_back(a);
                rec();
                prefix.pop_back();
            }
        };
        rec();
    }

    std::vector<Word> degree_zero(bool incoming) const {
        std::vector<Word> out;
        for (std::size_t v = 0; v < codes_.size(); ++v) {
            const auto nbrs = incoming ? predecessors(v) : successors(v);
            if (nbrs.empty()) out.push_back(word_at(v));
        }
        return out;
    }

    LengthSeq s_;
    int l_;
    int n_;
    std::vector<std::uint64_t> pow_;
    std::vector<std::uint64_t> codes_;
};

/// Seeded random walk on a pruned core, emitting n_steps letters. The first
/// N letters spell the start vertex; each later step follows a uniformly
/// random core arc, which exists for every core vertex by construction.
inline Word random_walk(const AvoidanceGraph& core, std::uint64_t seed, std::size_t n_steps) {
    if (core.vertex_count() == 0) throw std::invalid_argument("empty core");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_start(0, core.vertex_count() - 1);
    std::size_t at = pick_start(rng);
    Word stream = core.word_at(at);
    while (stream.size() < n_steps) {
        const auto next = core.successors(at);
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        at = next[pick(rng)];
        stream.push_back(core.word_at(at).back());
    }
    stream.resize(n_steps);
    return stream;
}

/// Result of one run of the sequential method.
struct SimOutcome {
    bool dead_end = false;
    std::size_t steps = 0;  // letters placed before stopping
    Word word;              // the word reached (full trace prefix)
};

/// The naive sequential method: repeatedly append a uniformly random letter
/// among those not creating an s-square, until stuck or max_steps letters.
inline SimOutcome sequential_simulate(const LengthSeq& s, int l, std::uint64_t seed,
                                      std::size_t max_steps) {
    if (l < 1) throw std::invalid_argument("alphabet size must be positive");
    std::mt19937_64 rng(seed);
    Word w;
    w.reserve(max_steps);
    while (w.size() < max_steps) {
        std::vector<Letter> allowed;
        for (Letter a = 0; a < l; ++a)
            if (!square_created_by_append(w, a, s)) allowed.push_back(a);
        if (allowed.empty()) return SimOutcome{true, w.size(), w};
        std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
        w.push_back(allowed[pick(rng)]);
    }
    return SimOutcome{false, w.size(), w};
}

}  // namespace sqfree
