#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqfree/partition.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// Condition C: every length strictly exceeds the sum of all smaller ones,
/// i.e. i_t > i_{t+1} + ... + i_r for 1 <= t <= r-1.
inline bool condition_c(const LengthSeq& s) {
    long long below = 0;
    for (int len : s.ascending()) {
        if (len <= below) return false;
        below += len;
    }
    return true;
}

/// Condition D: i_1 < i_2 + ... + i_r, yet both flanks (i_{r-1},...,i_1) and
/// (i_r,...,i_2) satisfy condition C.
inline bool condition_d(const LengthSeq& s) {
    const int r = s.rank_count();
    if (r < 2) return false;
    long long tail = 0;  // i_2 + ... + i_r
    for (int j = 2; j <= r; ++j) tail += s.length(j);
    if (s.length(1) >= tail) return false;
    if (s.length(1) <= tail - s.length(r)) return false;  // (i_{r-1},...,i_1) must satisfy C
    std::vector<int> inner(s.ascending().begin() + 1, s.ascending().end());
    std::vector<int> upper(s.ascending().begin(), s.ascending().end() - 1);
    return condition_c(LengthSeq(upper)) && (inner.empty() || condition_c(LengthSeq(inner)));
}

/// True iff s = (i_r, 2*i_r, ..., 2^{r-1}*i_r). Vacuously true for r = 1.
inline bool is_geometric_doubling(const LengthSeq& s) {
    const auto& lens = s.ascending();
    for (std::size_t k = 1; k < lens.size(); ++k)
        if (lens[k] != 2 * lens[k - 1]) return false;
    return true;
}

/// The m-values m(u, v) attached to a condition-C sequence:
///   m(v, v) = i_v,  m(v+1, v) = 2*i_v,
///   m(u, v) = min over w in [u, v] of (i_w - i_{w+1} - ... - i_v)  for u < v.
inline int m_value(const LengthSeq& s, int u, int v) {
    if (v < 1 || v > s.rank_count() || u < 1 || u > v + 1)
        throw std::out_of_range("m-value indices need 1 <= u <= v+1, v <= r");
    if (u == v + 1) return 2 * s.length(v);
    if (u == v) return s.length(v);
    long long best = s.length(v);
    long long suffix = s.length(v);
    for (int w = v - 1; w >= u; --w) {
        best = std::min(best, s.length(w) - suffix);
        suffix += s.length(w);
    }
    return static_cast<int>(best);
}

/// Closed-form construction of the generic word w(s) on [2*i_1] for a
/// condition-C sequence with all lengths >= 2.
///
/// Never applies the shift involutions themselves; instead it replays the
/// explicit orbit actions that folding in each smaller length i_j performs
/// on the orbits of the previous sequence:
///   1. conjoin [x] and [x + m(t, j)] for 0 < x < m(t+1, j) - m(t, j),
///      for every 1 <= t <= j (t = j covers the plain [x] ~ [x + i_j] step),
///   2. conjoin [m(t, j)] and [m(t, j-1)] whenever m(t, j) < i_j.
/// The result is independently checkable against generic_word_of(orbit_closure(s)).
inline GenericWord generic_word_recursive(const LengthSeq& s) {
    if (!condition_c(s))
        throw std::invalid_argument("recursive construction requires condition C");
    if (s.smallest() < 2)
        throw std::invalid_argument("recursive construction requires all lengths >= 2");
    const int N = s.window();
    const int r = s.rank_count();
    const int i1 = s.length(1);
    detail::UnionFind uf(N);
    for (int x = 1; x < i1; ++x) uf.unite(x - 1, x + i1 - 1);
    for (int j = 2; j <= r; ++j) {
        const int ij = s.length(j);
        for (int t = 1; t <= j; ++t) {
            const int step = m_value(s, t, j);
            const int next = m_value(s, t + 1, j);
            for (int x = 1; x < next - step; ++x) uf.unite(x - 1, x + step - 1);
        }
        for (int t = 1; t < j; ++t)
            if (m_value(s, t, j) < ij)
                uf.unite(m_value(s, t, j) - 1, m_value(s, t, j - 1) - 1);
    }
    std::vector<int> raw(static_cast<std::size_t>(N));
    for (int t = 0; t < N; ++t) raw[static_cast<std::size_t>(t)] = uf.find(t);
    return generic_word_of(SetPartition::from_assignment(raw));
}

/// Outcome of the closed-form minimal-alphabet analysis.
struct MinAVerdict {
    enum class Kind { Finite, Infinite, UnknownBounded };
    Kind kind = Kind::Infinite;
    int value = 0;  // Finite: exact value; UnknownBounded: upper bound

    static MinAVerdict finite(int k) { return {Kind::Finite, k}; }
    static MinAVerdict infinite() { return {Kind::Infinite, 0}; }
    static MinAVerdict unknown_bounded(int upper) { return {Kind::UnknownBounded, upper}; }

    bool operator==(const MinAVerdict&) const = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::Finite: return "finite(" + std::to_string(value) + ")";
            case Kind::Infinite: return "infinite";
            default: return "unknown(<=" + std::to_string(value) + ")";
        }
    }
};

/// Predicted minimal alphabet size, from the closed-form theorems only.
///
/// For smallest length >= 2 the answer is complete: under condition C it is
/// r+1 for the geometric-doubling family and r otherwise; failing condition C
/// gives infinity. For smallest length 1 only certain families are settled;
/// everything else is reported as unknown with the proven upper bound r+1.
inline MinAVerdict predict_minA(const LengthSeq& s) {
    const int r = s.rank_count();
    if (r == 1) return MinAVerdict::finite(2);
    if (s.smallest() >= 2) {
        if (!condition_c(s)) return MinAVerdict::infinite();
        return MinAVerdict::finite(is_geometric_doubling(s) ? r + 1 : r);
    }
    // smallest length is 1
    if (r == 2) return MinAVerdict::finite(3);
    if (is_geometric_doubling(s)) return MinAVerdict::finite(r + 1);  // (1, k, 2k, ...) has k = 1
    std::vector<int> tail(s.ascending().begin() + 1, s.ascending().end());
    if (is_geometric_doubling(LengthSeq(tail))) return MinAVerdict::finite(r + 1);
    if (!condition_c(s)) return MinAVerdict::infinite();
    return MinAVerdict::unknown_bounded(r + 1);
}

/// Dead-end prediction for the shift graph over an alphabet of size l.
struct DeadEndVerdict {
    enum class Kind { NoDeadEnds, HasDeadEnds, Unknown };
    Kind kind = Kind::Unknown;
    std::string reason;

    bool operator==(const DeadEndVerdict& o) const { return kind == o.kind; }

    std::string to_string() const {
        switch (kind) {
            case Kind::NoDeadEnds: return "no-dead-ends";
            case Kind::HasDeadEnds: return "has-dead-ends";
            default: return "unknown";
        }
    }
};

namespace detail {

template <typename Fn>
void for_each_subsequence_of_size(const std::vector<int>& items, int k, Fn&& fn) {
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == k) {
            fn(pick);
            return;
        }
        for (std::size_t at = from; at < items.size(); ++at) {
            if (static_cast<int>(pick.size()) + static_cast<int>(items.size() - at) < k) break;
            pick.push_back(items[at]);
            rec(at + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace detail

/// Predicts whether the sequential method over l letters can reach dead-ends.
///
/// A dead-end over l letters forces l pairwise distinct killing lengths (one
/// per letter), so only subsequences of exactly l lengths matter. The full
/// sequence with predicted minA = l gives a definite dead-end; a proper
/// subsequence whose candidates might survive the remaining lengths, or an
/// unsettled minA, yields Unknown.
inline DeadEndVerdict theorem1_predict(const LengthSeq& s, int l) {
    if (l <= 1) throw std::invalid_argument("alphabet must have at least 2 letters");
    const int r = s.rank_count();
    if (r > 8) throw std::invalid_argument("subsequence analysis limited to r <= 8");
    if (r < l)
        return {DeadEndVerdict::Kind::NoDeadEnds, "fewer square lengths than letters"};
    bool definite = false;
    bool possible = false;
    std::string possible_reason;
    detail::for_each_subsequence_of_size(s.ascending(), l, [&](const std::vector<int>& pick) {
        const LengthSeq sub{std::vector<int>(pick)};
        const MinAVerdict v = predict_minA(sub);
        const bool full = (sub == s);
        if (v.kind == MinAVerdict::Kind::Finite && v.value <= l) {
            if (full) {
                definite = true;
            } else if (!possible) {
                possible = true;
                possible_reason = "subsequence (" + sub.to_string() + ") admits candidates";
            }
        } else if (v.kind == MinAVerdict::Kind::UnknownBounded && !possible) {
            possible = true;
            possible_reason = "minA(" + sub.to_string() + ") unsettled";
        }
    });
    if (definite)
        return {DeadEndVerdict::Kind::HasDeadEnds, "minA equals the alphabet size"};
    if (possible) return {DeadEndVerdict::Kind::Unknown, possible_reason};
    return {DeadEndVerdict::Kind::NoDeadEnds, "every length-l subsequence excluded"};
}

}  // namespace sqfree
