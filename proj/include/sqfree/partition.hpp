#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// Partition of the ground set [n] = {1, ..., n}.
///
/// Canonical form: blocks are numbered by their smallest element, so the
/// per-position block-id vector is a restricted-growth string and two
/// partitions are equal iff those vectors are equal. Positions are 1-based
/// at the API boundary.
class SetPartition {
public:
    SetPartition() = default;

    /// Builds from any per-position labeling (0-based vector, arbitrary ids);
    /// labels are canonicalized by first occurrence.
    static SetPartition from_assignment(const std::vector<int>& raw) {
        SetPartition p;
        p.n_ = static_cast<int>(raw.size());
        p.block_id_.assign(raw.size(), -1);
        std::vector<std::pair<int, int>> seen;  // (raw label, canonical id)
        for (std::size_t k = 0; k < raw.size(); ++k) {
            int id = -1;
            for (const auto& [label, canon] : seen)
                if (label == raw[k]) { id = canon; break; }
            if (id < 0) {
                id = static_cast<int>(seen.size());
                seen.emplace_back(raw[k], id);
            }
            p.block_id_[k] = id;
        }
        p.block_count_ = static_cast<int>(seen.size());
        return p;
    }

    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> raw(static_cast<std::size_t>(n), -1);
        int label = 0;
        for (const auto& blk : blocks) {
            if (blk.empty()) throw std::invalid_argument("blocks must be nonempty");
            for (int pos : blk) {
                if (pos < 1 || pos > n) throw std::out_of_range("block element outside [n]");
                if (raw[static_cast<std::size_t>(pos) - 1] != -1)
                    throw std::invalid_argument("blocks must be disjoint");
                raw[static_cast<std::size_t>(pos) - 1] = label;
            }
            ++label;
        }
        for (int v : raw)
            if (v == -1) throw std::invalid_argument("blocks must cover [n]");
        return from_assignment(raw);
    }

    static SetPartition singletons(int n) {
        std::vector<int> raw(static_cast<std::size_t>(n));
        std::iota(raw.begin(), raw.end(), 0);
        return from_assignment(raw);
    }

    int ground_size() const { return n_; }
    int block_count() const { return block_count_; }

    int block_of(int pos) const {
        if (pos < 1 || pos > n_) throw std::out_of_range("position outside [n]");
        return block_id_[static_cast<std::size_t>(pos) - 1];
    }

    bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

    /// Blocks as 1-based position lists, ordered by smallest element.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
        for (int pos = 1; pos <= n_; ++pos)
            out[static_cast<std::size_t>(block_of(pos))].push_back(pos);
        return out;
    }

    /// The canonical per-position labeling (0-based ids, RGS property).
    const std::vector<int>& assignment() const { return block_id_; }

    bool operator==(const SetPartition&) const = default;

private:
    int n_ = 0;
    int block_count_ = 0;
    std::vector<int> block_id_;
};

/// Canonical representative of a partition's word class: the
/// restricted-growth string, rendered A, B, C, ... in block order.
struct GenericWord {
    std::vector<int> rgs;  // 0-based block ids, restricted growth

    std::string to_string() const {
        std::string out;
        for (int v : rgs) {
            if (v < 26) {
                out += static_cast<char>('A' + v);
            } else {
                if (!out.empty() && out.back() != '.') out += '.';
                out += std::to_string(v) + '.';
            }
        }
        return out;
    }

    bool operator==(const GenericWord&) const = default;
};

/// The involution tau_i of [N]: swaps t <-> t+i for 0 < t < i, fixes t = i
/// and all t >= 2i. Requires 2i <= N.
inline int tau_apply(int i, int t, int N) {
    if (i < 1 || 2 * i > N) throw std::out_of_range("tau requires 1 <= i and 2i <= N");
    if (t < 1 || t > N) throw std::out_of_range("tau argument outside [N]");
    if (t < i) return t + i;
    if (t > i && t < 2 * i) return t - i;
    return t;
}

/// True iff every block of p is contained in some block of q (p refines q).
inline bool refines(const SetPartition& p, const SetPartition& q) {
    if (p.ground_size() != q.ground_size())
        throw std::invalid_argument("refines: ground size mismatch");
    // p refines q iff q's labeling is constant on each p-block
    std::vector<int> image(static_cast<std::size_t>(p.block_count()), -1);
    for (int pos = 1; pos <= p.ground_size(); ++pos) {
        int& img = image[static_cast<std::size_t>(p.block_of(pos))];
        const int qb = q.block_of(pos);
        if (img == -1) img = qb;
        else if (img != qb) return false;
    }
    return true;
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/// The orbit partition o(s) on [2*i_1]: the finest partition invariant under
/// every tau_i, i in s. Computed as the equivalence generated by t ~ tau_i(t).
inline SetPartition orbit_closure(const LengthSeq& s) {
    const int N = s.window();
    detail::UnionFind uf(N);
    for (int i : s.ascending())
        for (int t = 1; t <= N; ++t)
            uf.unite(t - 1, tau_apply(i, t, N) - 1);
    std::vector<int> raw(static_cast<std::size_t>(N));
    for (int t = 0; t < N; ++t) raw[static_cast<std::size_t>(t)] = uf.find(t);
    return SetPartition::from_assignment(raw);
}

inline GenericWord generic_word_of(const SetPartition& p) {
    return GenericWord{p.assignment()};
}

inline SetPartition partition_of(const Word& w) {
    return SetPartition::from_assignment(w);
}

/// Concrete word obtained by assigning one letter per block.
inline Word word_of(const SetPartition& p, const std::vector<Letter>& block_letters) {
    if (static_cast<int>(block_letters.size()) != p.block_count())
        throw std::invalid_argument("need one letter per block");
    Word w;
    w.reserve(static_cast<std::size_t>(p.ground_size()));
    for (int pos = 1; pos <= p.ground_size(); ++pos)
        w.push_back(block_letters[static_cast<std::size_t>(p.block_of(pos))]);
    return w;
}

/// Smallest 1-based j such that j+t ~ j+t+i for all 0 <= t <= i-1, if any.
inline std::optional<int> partition_has_square(const SetPartition& p, int i) {
    if (i < 1 || 2 * i > p.ground_size())
        throw std::out_of_range("partition_has_square requires 2i <= n");
    for (int j = 1; j + 2 * i - 1 <= p.ground_size(); ++j) {
        bool square = true;
        for (int t = 0; square && t < i; ++t)
            square = p.same_block(j + t, j + t + i);
        if (square) return j;
    }
    return std::nullopt;
}

inline bool partition_is_s_squarefree(const SetPartition& p, const LengthSeq& s) {
    for (int i : s.ascending())
        if (partition_has_square(p, i)) return false;
    return true;
}

/// Primary difference conditions on a partition of [2*i_1]: the positions
/// i_j are pairwise dissimilar, and i_j is dissimilar from 2*i_j for each j.
inline bool primary_conditions_ok(const SetPartition& p, const LengthSeq& s) {
    if (p.ground_size() != s.window())
        throw std::invalid_argument("primary conditions need ground size 2*i_1");
    const auto& lens = s.ascending();
    for (std::size_t a = 0; a < lens.size(); ++a) {
        if (p.same_block(lens[a], 2 * lens[a])) return false;
        for (std::size_t b = a + 1; b < lens.size(); ++b)
            if (p.same_block(lens[a], lens[b])) return false;
    }
    return true;
}

/// Enumerates all partitions obtained by merging p's blocks into exactly k
/// groups, in lexicographic order of the merge pattern (an RGS over p's
/// blocks). Count is the Stirling number S(block_count, k).
template <typename Fn>
void for_each_coarsening(const SetPartition& p, int k, Fn&& fn) {
    const int b = p.block_count();
    if (k < 1 || k > b)
        throw std::out_of_range("coarsening block count outside [1, block_count]");
    std::vector<int> pattern(static_cast<std::size_t>(b), 0);
    // recursively assign pattern[t] in 0..max_used+1, pruned so exactly k groups result
    std::function<bool(int, int)> rec = [&](int t, int used) -> bool {
        if (t == b) {
            if (used != k) return true;
            std::vector<int> raw(p.assignment().size());
            for (std::size_t pos = 0; pos < raw.size(); ++pos)
                raw[pos] = pattern[static_cast<std::size_t>(p.assignment()[pos])];
            return fn(SetPartition::from_assignment(raw));
        }
        const int limit = std::min(used, k - 1);
        for (int g = 0; g <= limit; ++g) {
            const int next_used = used + (g == used ? 1 : 0);
            if (next_used + (b - t - 1) < k) continue;  // cannot reach k groups
            pattern[static_cast<std::size_t>(t)] = g;
            if (!rec(t + 1, next_used)) return false;
        }
        return true;
    };
    rec(0, 0);
}

inline std::vector<SetPartition> coarsenings_with_k_blocks(const SetPartition& p, int k) {
    std::vector<SetPartition> out;
    for_each_coarsening(p, k, [&](const SetPartition& q) {
        out.push_back(q);
        return true;
    });
    return out;
}

}  // namespace sqfree
