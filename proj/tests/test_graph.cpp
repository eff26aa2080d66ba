#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sqfree/audit.hpp"
#include "sqfree/graph.hpp"

using namespace sqfree;

namespace {

std::set<Word> brute_force_vertices(const LengthSeq& s, int l) {
    std::set<Word> out;
    const int n = s.window();
    Word w;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) {
            if (is_s_squarefree(w, s)) out.insert(w);
            return;
        }
        for (Letter a = 0; a < l; ++a) {
            w.push_back(a);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

std::set<Word> as_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

TEST_CASE("vertex sets match a brute-force scan") {
    for (const auto& [lens, l] : std::vector<std::pair<std::vector<int>, int>>{
             {{1, 2}, 2}, {{1, 2}, 3}, {{2}, 2}, {{2, 3}, 3}, {{3, 5}, 2}}) {
        const LengthSeq s(lens);
        const AvoidanceGraph g(s, l);
        std::set<Word> got;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) got.insert(g.word_at(v));
        CHECK(got == brute_force_vertices(s, l));
    }
}

TEST_CASE("build examples") {
    CHECK(AvoidanceGraph(LengthSeq({1, 2}), 2).vertex_count() == 0);
    const AvoidanceGraph g123(LengthSeq({1, 2}), 3);
    CHECK(g123.vertex_count() > 0);
    CHECK(AvoidanceGraph(LengthSeq({3, 5}), 2).contains(word_from_letters("aabaaaabab")));
    CHECK_THROWS_AS(AvoidanceGraph(LengthSeq({3, 5}), 2, 100), BudgetExceeded);
}

TEST_CASE("arcs follow the single-letter shift") {
    const LengthSeq s({2, 3});
    const AvoidanceGraph g(s, 3);
    long mismatches = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const Word w = g.word_at(v);
        std::set<Word> expect;
        for (Letter a = 0; a < 3; ++a) {
            Word shifted(w.begin() + 1, w.end());
            shifted.push_back(a);
            if (is_s_squarefree(shifted, s)) expect.insert(shifted);
        }
        std::set<Word> got;
        for (std::size_t u : g.successors(v)) got.insert(g.word_at(u));
        if (got != expect) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("dead-ends and dead-starts") {
    const AvoidanceGraph g35(LengthSeq({3, 5}), 2);
    const auto ends = as_set(g35.dead_ends());
    CHECK(ends.count(word_from_letters("aabaaaabab")) == 1);
    CHECK(ends.count(word_from_letters("bbabbbbaba")) == 1);

    const AvoidanceGraph g245(LengthSeq({2, 4, 5}), 2);
    CHECK(as_set(g245.dead_ends()).count(word_from_letters("bbbaabbbab")) == 1);

    CHECK(AvoidanceGraph(LengthSeq({1, 2}), 3).dead_ends().empty());

    // a dead-end is exactly a word no letter can be prepended to
    long mismatches = 0;
    for (std::size_t v = 0; v < g35.vertex_count(); ++v) {
        const Word w = g35.word_at(v);
        bool blocked = true;
        for (Letter a = 0; a < 2; ++a)
            if (!square_created_by_prepend(w, a, g35.lengths())) blocked = false;
        if (blocked != (ends.count(w) == 1)) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("duality between dead-ends and dead-starts") {
    for (const auto& [lens, l] : std::vector<std::pair<std::vector<int>, int>>{
             {{3, 5}, 2}, {{2, 4, 5}, 2}, {{1, 2}, 3}, {{2, 3}, 2}}) {
        const AvoidanceGraph g(LengthSeq(lens), l);
        std::vector<Word> ends = g.dead_ends();
        for (Word& w : ends) w = reversed(w);
        CHECK(as_set(ends) == as_set(g.dead_starts()));
    }
}

TEST_CASE("pruned core") {
    const AvoidanceGraph g123(LengthSeq({1, 2}), 3);
    CHECK(g123.pruned_core().vertex_count() == g123.vertex_count());

    CHECK(AvoidanceGraph(LengthSeq({1, 2}), 2).pruned_core().vertex_count() == 0);

    const AvoidanceGraph g35(LengthSeq({3, 5}), 2);
    const auto core = g35.pruned_core();
    CHECK(core.vertex_count() < g35.vertex_count());
    CHECK(core.pruned_core().vertex_count() == core.vertex_count());
    long bad_degree = 0;
    for (std::size_t v = 0; v < core.vertex_count(); ++v)
        if (core.successors(v).empty() || core.predecessors(v).empty()) ++bad_degree;
    CHECK(bad_degree == 0);
}

TEST_CASE("random walks stay squarefree and are seed-deterministic") {
    const auto core = AvoidanceGraph(LengthSeq({1, 2}), 3).pruned_core();
    const Word w1 = random_walk(core, 7, 10'000);
    CHECK(w1.size() == 10'000);
    CHECK(is_s_squarefree(w1, LengthSeq({1, 2})));
    CHECK(random_walk(core, 7, 10'000) == w1);
    CHECK(random_walk(core, 8, 10'000) != w1);

    const auto core37 = AvoidanceGraph(LengthSeq({3, 7}), 2).pruned_core();
    if (core37.vertex_count() > 0)
        CHECK(is_s_squarefree(random_walk(core37, 42, 1'000), LengthSeq({3, 7})));

    const auto empty_core = AvoidanceGraph(LengthSeq({1, 2}), 2).pruned_core();
    CHECK_THROWS_AS(random_walk(empty_core, 1, 10), std::invalid_argument);
}

TEST_CASE("sequential method simulation") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto out = sequential_simulate(LengthSeq({1, 2}), 2, seed, 1'000);
        CHECK(out.dead_end);
        CHECK(out.steps <= 4);
    }
    const auto ok = sequential_simulate(LengthSeq({1, 2}), 3, 3, 10'000);
    CHECK_FALSE(ok.dead_end);
    CHECK(is_s_squarefree(ok.word, LengthSeq({1, 2})));
}

TEST_CASE("graph property audit helper") {
    const AvoidanceGraph g(LengthSeq({2, 3}), 2);
    CHECK(check_graph_properties(g, 5, 2'000).empty());
}

TEST_CASE("dot export lists every vertex") {
    const AvoidanceGraph g(LengthSeq({1}), 2);
    std::ostringstream os;
    g.write_dot(os);
    const std::string dot = os.str();
    CHECK(dot.find("digraph") != std::string::npos);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        CHECK(dot.find(letters_of(g.word_at(v))) != std::string::npos);
}
