#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sqfree/audit.hpp"
#include "sqfree/mina.hpp"

using namespace sqfree;

TEST_CASE("primary difference graph shapes") {
    const auto single = primary_difference_graph(LengthSeq({4}));
    CHECK(single.edges.size() == 1);

    // the 2 ~ 4 pair coincides with the 2 ~ 2*2 doubling edge, leaving a
    // path on the orbits of 2, 4, 8
    const auto pair = primary_difference_graph(LengthSeq({2, 4}));
    CHECK(pair.edges.size() == 2);
    const auto o24 = orbit_closure(LengthSeq({2, 4}));
    std::vector<int> verts = {o24.block_of(2), o24.block_of(4), o24.block_of(8)};
    std::sort(verts.begin(), verts.end());
    for (auto [a, b] : pair.edges) {
        CHECK(std::binary_search(verts.begin(), verts.end(), a));
        CHECK(std::binary_search(verts.begin(), verts.end(), b));
    }

    CHECK(primary_difference_graph(LengthSeq({2, 4, 8})).edges.size() == 4);
    CHECK_THROWS_AS(primary_difference_graph(LengthSeq({2, 3, 5})), std::domain_error);
}

TEST_CASE("exact chromatic number") {
    DifferenceGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    CHECK(chromatic_number(k4) == 4);
    DifferenceGraph p4{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(chromatic_number(p4) == 2);
    DifferenceGraph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
    CHECK(chromatic_number(c5) == 3);
    DifferenceGraph isolated{3, {}};
    CHECK(chromatic_number(isolated) == 1);
    DifferenceGraph huge{30, {}};
    CHECK_THROWS_AS(chromatic_number(huge), std::invalid_argument);
}

TEST_CASE("exact minA golden values") {
    const auto a = minA_exact(LengthSeq({3, 5}), 4);
    REQUIRE(a.finite);
    CHECK(a.value == 2);
    REQUIRE(a.witness.has_value());
    CHECK(*a.witness == SetPartition::from_blocks(10, {{1, 2, 4, 5, 6, 7, 9}, {3, 8, 10}}));

    const auto b = minA_exact(LengthSeq({2, 4}), 4);
    REQUIRE(b.finite);
    CHECK(b.value == 3);

    const auto c = minA_exact(LengthSeq({2, 3, 5}), 5);
    CHECK_FALSE(c.finite);

    const auto d = minA_exact(LengthSeq({2, 4, 5}));
    CHECK_FALSE(d.finite);
}

TEST_CASE("witnesses are genuine candidates and coloring is a lower bound") {
    long violations = 0;
    for_each_length_seq(2, 9, [&](const LengthSeq& s) {
        const auto res = minA_exact(s);
        if (!res.finite) return;
        if (!res.witness) { ++violations; return; }
        const auto& w = *res.witness;
        if (w.block_count() != res.value) ++violations;
        if (!refines(orbit_closure(s), w)) ++violations;
        if (!partition_is_s_squarefree(w, s)) ++violations;
        if (!primary_conditions_ok(w, s)) ++violations;
        if (chromatic_number(primary_difference_graph(s)) > res.value) ++violations;
    });
    CHECK(violations == 0);
}

TEST_CASE("prediction agrees with the exact solver where it decides") {
    long mismatches = 0;
    long decided = 0;
    for_each_length_seq(3, 9, [&](const LengthSeq& s) {
        const auto predicted = predict_minA(s);
        if (predicted.kind == MinAVerdict::Kind::UnknownBounded) return;
        ++decided;
        const auto exact = minA_exact(s);
        if (predicted.kind == MinAVerdict::Kind::Infinite) {
            if (exact.finite) ++mismatches;
        } else if (!exact.finite || exact.value != predicted.value) {
            ++mismatches;
        }
    });
    CHECK(mismatches == 0);
    CHECK(decided > 50);
}

TEST_CASE("profile records candidate existence per block count") {
    const auto res = minA_exact(LengthSeq({3, 5}), 4);
    REQUIRE(res.candidate_at_k.size() == 4);
    CHECK_FALSE(res.candidate_at_k[0]);  // one block merges 3 with 6
    CHECK(res.candidate_at_k[1]);
    CHECK(res.candidate_at_k[3]);  // o(3,5) itself has four blocks
}

TEST_CASE("dead-end words from the candidate machinery") {
    const auto from35 = dead_end_words_from(LengthSeq({3, 5}), 2);
    CHECK(from35.count(word_from_letters("aabaaaabab")) == 1);
    CHECK(from35.count(word_from_letters("bbabbbbaba")) == 1);

    CHECK(dead_end_words_from(LengthSeq({2, 4}), 2).empty());

    const auto from245 = dead_end_words_from(LengthSeq({2, 4, 5}), 2);
    CHECK(from245.count(word_from_letters("bbbaabbbab")) == 1);

    // containment in the brute-force dead-end sets; equality is not claimed
    for (const auto& lens : {std::vector<int>{3, 5}, {2, 4, 5}, {2, 3}}) {
        const LengthSeq s(lens);
        const auto g = AvoidanceGraph(s, 2);
        const auto ends = g.dead_ends();
        const std::set<Word> brute(ends.begin(), ends.end());
        for (const Word& w : dead_end_words_from(s, 2)) CHECK(brute.count(w) == 1);
    }
}

TEST_CASE("solver respects its budget") {
    CHECK_THROWS_AS(minA_exact(LengthSeq({3, 5}), 4, 2), BudgetExceeded);
}
