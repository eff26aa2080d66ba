#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqfree {

/// Letters are dense integer indices 0..l-1; the presentation letters
/// a, b, c, ... exist only at the I/O boundary.
using Letter = int;
using Word = std::vector<Letter>;

/// Strictly increasing sequence of square lengths.
///
/// Stored in ascending order, so ascending().back() is the largest length.
/// Following the usual convention for these sequences, length(1) denotes the
/// largest entry and length(r) the smallest; all derived quantities (the
/// window size N = 2 * largest, the m-values, conditions C and D) are stated
/// in terms of that ranking.
class LengthSeq {
public:
    explicit LengthSeq(std::vector<int> ascending) : lengths_(std::move(ascending)) {
        if (lengths_.empty())
            throw std::invalid_argument("length sequence must be nonempty");
        for (std::size_t k = 0; k < lengths_.size(); ++k) {
            if (lengths_[k] <= 0)
                throw std::invalid_argument("square lengths must be positive");
            if (k > 0 && lengths_[k] <= lengths_[k - 1])
                throw std::invalid_argument("square lengths must be strictly increasing");
        }
    }

    /// Number of square lengths r.
    int rank_count() const { return static_cast<int>(lengths_.size()); }

    /// The j-th largest length (1-based): length(1) is the largest.
    int length(int j) const {
        if (j < 1 || j > rank_count())
            throw std::out_of_range("length rank out of range");
        return lengths_[lengths_.size() - static_cast<std::size_t>(j)];
    }

    int largest() const { return lengths_.back(); }
    int smallest() const { return lengths_.front(); }

    /// Window size N = 2 * largest length; all dead-end analysis happens on
    /// words of exactly this length.
    int window() const { return 2 * lengths_.back(); }

    const std::vector<int>& ascending() const { return lengths_; }

    bool contains(int i) const {
        return std::binary_search(lengths_.begin(), lengths_.end(), i);
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < lengths_.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(lengths_[k]);
        }
        return out;
    }

    bool operator==(const LengthSeq&) const = default;

private:
    std::vector<int> lengths_;
};

/// A square vv found in a word: |v| = length, v v starts at `start` (1-based).
struct SquareHit {
    int length = 0;
    int start = 0;
    bool operator==(const SquareHit&) const = default;
};

/// True iff w has an i-square starting at the 1-based position j,
/// i.e. w[j+t] == w[j+t+i] for all 0 <= t <= i-1.
inline bool has_square_at(const Word& w, int i, int j) {
    if (i <= 0)
        throw std::out_of_range("square length must be positive");
    if (j < 1 || static_cast<std::size_t>(j) + 2 * static_cast<std::size_t>(i) - 1 > w.size())
        throw std::out_of_range("square window [j, j+2i-1] exceeds word bounds");
    const std::size_t base = static_cast<std::size_t>(j) - 1;
    for (int t = 0; t < i; ++t)
        if (w[base + t] != w[base + t + i]) return false;
    return true;
}

/// True iff w contains no i-square for any i in s.
inline bool is_s_squarefree(const Word& w, const LengthSeq& s) {
    for (int i : s.ascending()) {
        const int last_start = static_cast<int>(w.size()) - 2 * i + 1;
        for (int j = 1; j <= last_start; ++j)
            if (has_square_at(w, i, j)) return false;
    }
    return true;
}

/// Given an s-squarefree w, reports a square that appending `a` would create.
///
/// Any new square must end at the appended letter, so only the |s| suffix
/// windows of length 2i (i in s) are inspected. Smallest offending length
/// is returned.
inline std::optional<SquareHit> square_created_by_append(const Word& w, Letter a,
                                                         const LengthSeq& s) {
    const int m = static_cast<int>(w.size());
    for (int i : s.ascending()) {
        if (m + 1 < 2 * i) continue;
        // candidate square occupies positions [m+2-2i, m+1] of w.a
        const int j = m + 2 - 2 * i;
        bool square = (w[static_cast<std::size_t>(m + 1 - i) - 1] == a);
        for (int t = 0; square && t < i - 1; ++t)
            square = (w[static_cast<std::size_t>(j + t) - 1] ==
                      w[static_cast<std::size_t>(j + t + i) - 1]);
        if (square) return SquareHit{i, j};
    }
    return std::nullopt;
}

/// Mirror of square_created_by_append: a square that prepending `a` to w
/// would create. Any such square starts at position 1 of a.w.
inline std::optional<SquareHit> square_created_by_prepend(const Word& w, Letter a,
                                                          const LengthSeq& s) {
    const int m = static_cast<int>(w.size());
    for (int i : s.ascending()) {
        if (m + 1 < 2 * i) continue;
        // candidate square occupies positions [1, 2i] of a.w: a w1..w_{i-1} = w_i..w_{2i-1}
        bool square = (w[static_cast<std::size_t>(i) - 1] == a);
        for (int t = 1; square && t < i; ++t)
            square = (w[static_cast<std::size_t>(t) - 1] ==
                      w[static_cast<std::size_t>(t + i) - 1]);
        if (square) return SquareHit{i, 1};
    }
    return std::nullopt;
}

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word word_from_letters(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("word letters must be in a..z");
        w.push_back(c - 'a');
    }
    return w;
}

inline std::string letters_of(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (x < 0 || x >= 26)
            throw std::invalid_argument("letter index outside a..z presentation range");
        out += static_cast<char>('a' + x);
    }
    return out;
}

}  // namespace sqfree
