#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "antsort/limits.hpp"
#include "support.hpp"

using namespace antsort;

TEST_SUITE("limits") {

namespace {

// full words reachable by branching the engine at every availability set
std::vector<Word> engine_words(int k) {
    std::vector<Word> out;
    Word cur;
    auto dfs = [&](auto&& self, const BlockEngine& eng) -> void {
        std::vector<ElementId> avail = eng.available();
        if (avail.empty()) {
            out.push_back(cur);
            return;
        }
        for (ElementId x : avail) {
            BlockEngine next = eng;
            next.step(x);
            cur.push_back(x);
            self(self, next);
            cur.pop_back();
        }
    };
    dfs(dfs, BlockEngine(k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SuboptimalityRow> rows_for(const SuboptimalityReport& rep,
                                       const std::string& family) {
    std::vector<SuboptimalityRow> out;
    for (const auto& r : rep.rows)
        if (r.family == family) out.push_back(r);
    return out;
}

}  // namespace

TEST_CASE("rotated-block words are the cut-position subsets") {
    LanguageSet t3 = enumerate_rotation(3);
    CHECK(t3.words() == std::vector<Word>{
                            {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 0, 1}});
    CHECK(enumerate_rotation(1).words() == std::vector<Word>{{0}});
    for (int n = 1; n <= 14; ++n) {
        LanguageSet t = enumerate_rotation(n);
        CHECK(t.size() == rotation_count(n));
        CHECK(t.size() == std::uint64_t{1} << (n - 1));
        CHECK(t.permutation_count() == t.size());
    }
    CHECK(rotation_count(8) == 128);
    CHECK_THROWS_AS(rotation_count(0), UsageError);
    CHECK_THROWS_AS(rotation_count(15), LimitError);
    CHECK_THROWS_AS(enumerate_rotation(15), LimitError);
}

TEST_CASE("rotated blocks pass one axiom set and fail the other") {
    for (int n = 1; n <= 2; ++n) {
        RotationAxiomReport r = check_rotation_is_greedoid_not_antimatroid(n);
        CHECK(r.greedoid.ok);
        CHECK(r.antimatroid.ok);  // one or two elements leave nothing to lose
    }
    for (int n = 3; n <= 7; ++n) {
        RotationAxiomReport r = check_rotation_is_greedoid_not_antimatroid(n);
        CHECK(r.greedoid.ok);
        CHECK_FALSE(r.antimatroid.ok);
        CHECK_FALSE(r.antimatroid.reason.empty());
    }
    CHECK_THROWS_AS(check_rotation_is_greedoid_not_antimatroid(8), LimitError);
}

TEST_CASE("non-monotone tables may take availability back") {
    ExplicitNmps s = single_move_nmps(3);
    CHECK(s.eval(1, 0));          // opens a word
    CHECK_FALSE(s.eval(1, 0b100));  // gone once someone else went first
    CHECK(s.eval(1, 0b001));
    CHECK(s.eval(2, 0b011));
    CHECK_FALSE(s.eval(2, 0b001));

    // the same tables are rejected by the monotone type
    CHECK_THROWS_AS(ExplicitMps::from_predicate(
                        3,
                        [](ElementId x, Mask chosen) {
                            Mask before = (Mask{1} << x) - 1;
                            return chosen == 0 ||
                                   (chosen & before) == before;
                        }),
                    InputError);

    CHECK_THROWS_AS(ExplicitNmps(2, {}), InputError);
    CHECK_THROWS_AS(ExplicitNmps(1, {{1, 1}}), InputError);
    CHECK_THROWS_AS(ExplicitNmps(17, {}), LimitError);
    CHECK_THROWS_AS(enumerate_nmps_language(single_move_nmps(5), 4),
                    LimitError);
}

TEST_CASE("front-move words come from their tables") {
    CHECK(single_move_permutations(1).words() == std::vector<Word>{{0}});
    for (int n = 1; n <= 6; ++n) {
        LanguageSet perms = single_move_permutations(n);
        CHECK(perms.size() == static_cast<std::size_t>(n));
        CHECK(perms.permutation_count() == static_cast<std::size_t>(n));
        LanguageSet closed = perms.prefix_closure();
        LanguageSet generated = enumerate_nmps_language(single_move_nmps(n));
        CHECK(generated.words() == closed.words());
    }
    CHECK(single_move_permutations(4).words() ==
          std::vector<Word>{
              {0, 1, 2, 3}, {1, 0, 2, 3}, {2, 0, 1, 3}, {3, 0, 1, 2}});
}

TEST_CASE("language tables round-trip exactly when exchange holds") {
    SUBCASE("rotated blocks") {
        for (int n = 1; n <= 7; ++n) {
            LanguageSet closed = enumerate_rotation(n).prefix_closure();
            REQUIRE(check_greedoid_axioms(closed).ok);
            LanguageSet back =
                enumerate_nmps_language(nmps_from_greedoid(closed));
            CHECK(back.words() == closed.words());
        }
    }
    SUBCASE("every antimatroid is covered") {
        std::mt19937_64 rng(81);
        int tried = 0;
        for (int trial = 0; trial < 60 && tried < 25; ++trial) {
            int n = 2 + static_cast<int>(rng() % 5);
            ExplicitMps s = support::random_anchor_mps(n, rng);
            LanguageSet lang = enumerate_language(s);
            if (!check_greedoid_axioms(lang).ok) continue;
            ++tried;
            LanguageSet back =
                enumerate_nmps_language(nmps_from_greedoid(lang));
            CHECK(back.words() == lang.words());
        }
        CHECK(tried >= 25);
        ExplicitMps chain = support::chain(5);
        LanguageSet lang = enumerate_language(chain);
        CHECK(enumerate_nmps_language(nmps_from_greedoid(lang)).words() ==
              lang.words());
        ExplicitMps free4 = support::free_mps(4);
        LanguageSet lang4 = enumerate_language(free4);
        CHECK(enumerate_nmps_language(nmps_from_greedoid(lang4)).words() ==
              lang4.words());
    }
    SUBCASE("two mirrored ribbons work without the exchange axiom") {
        LanguageSet two(4, {{0, 1, 2, 3}, {3, 2, 1, 0}});
        LanguageSet closed = two.prefix_closure();
        CHECK_FALSE(check_greedoid_axioms(closed).ok);
        LanguageSet back = enumerate_nmps_language(nmps_from_greedoid(closed));
        CHECK(back.words() == closed.words());
    }
    SUBCASE("the construction closes over swap-compatible words") {
        LanguageSet three(4, {{0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 2, 3}});
        LanguageSet closed = three.prefix_closure();
        LanguageSet back = enumerate_nmps_language(nmps_from_greedoid(closed));
        CHECK(back.contains({1, 0, 3, 2}));
        CHECK(back.words() != closed.words());
    }
}

TEST_CASE("the ascending answers kill at most one candidate each") {
    for (int n : {2, 3, 8, 33, 64}) {
        AdversaryRun run = run_single_move_adversary(n);
        CHECK(run.comparisons == static_cast<std::uint64_t>(n - 1));
        CHECK(run.survivors == 1);
        CHECK(run.max_killed_by_one_query == (n > 1 ? 1 : 0));
    }

    SingleMoveAdversary adv(5);
    CHECK(adv.answer(1, 3));
    CHECK_FALSE(adv.answer(4, 2));
    CHECK(adv.candidates_left() == 3);
    CHECK_FALSE(adv.candidate_alive(3));
    CHECK_FALSE(adv.candidate_alive(4));
    CHECK(adv.candidate_alive(0));
    adv.answer(2, 4);  // already dead, nothing left to rule out
    CHECK(adv.last_killed() == 0);
    CHECK(adv.candidates_left() == 3);
    CHECK_THROWS_AS(adv.answer(2, 2), UsageError);
    CHECK_THROWS_AS(adv.answer(0, 5), UsageError);

    // too few questions always leave an undecided pair
    std::mt19937_64 rng(82);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        SingleMoveAdversary a(n);
        for (int q = 0; q < n - 2; ++q) {
            ElementId x = static_cast<ElementId>(rng() % n);
            ElementId y = static_cast<ElementId>(rng() % (n - 1));
            if (y >= x) ++y;
            a.answer(x, y);
        }
        CHECK(a.candidates_left() >= 2);
    }
}

TEST_CASE("one shuffled block per word, counted and enumerated") {
    CHECK(block_descriptor_count(1) == 1);
    CHECK(block_descriptor_count(2) == 4);
    CHECK(block_descriptor_count(3) == 18);
    CHECK(block_descriptor_count(4) == 96);
    CHECK(block_descriptor_count(16) ==
          16 * std::uint64_t{20922789888000});
    CHECK(block_distinct_count(2) == 3);
    CHECK(block_distinct_count(4) == 93);
    CHECK_THROWS_AS(block_descriptor_count(0), UsageError);
    CHECK_THROWS_AS(block_descriptor_count(17), LimitError);
    CHECK_THROWS_AS(enumerate_block(5), LimitError);

    CHECK(enumerate_block(2).words() ==
          std::vector<Word>{{0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 2, 3}});
    for (int k = 1; k <= 4; ++k) {
        LanguageSet t = enumerate_block(k);
        CHECK(t.size() == block_distinct_count(k));
        CHECK(t.permutation_count() == t.size());
    }
}

TEST_CASE("the engine releases blocks by the order chosen so far") {
    for (int k = 1; k <= 4; ++k)
        CHECK(engine_words(k) == enumerate_block(k).words());

    // same chosen set, different order, different availability
    BlockEngine asc(3);
    asc.step(0);
    asc.step(1);
    asc.step(2);
    CHECK(asc.available() == std::vector<ElementId>{3, 4, 5});

    BlockEngine mixed(3);
    mixed.step(1);
    CHECK(mixed.available() == std::vector<ElementId>{0, 2});
    mixed.step(0);
    mixed.step(2);
    CHECK(mixed.available() == std::vector<ElementId>{3});
    CHECK(mixed.step(3) == std::vector<ElementId>{4});
    CHECK(mixed.step(4) == std::vector<ElementId>{5});
    CHECK(mixed.step(5) == std::vector<ElementId>{6});
    CHECK_FALSE(mixed.done());
    CHECK_THROWS_AS(mixed.step(8), UsageError);
    mixed.step(6);
    mixed.step(7);
    CHECK(mixed.step(8).empty());
    CHECK(mixed.done());
    CHECK(mixed.available().empty());

    CHECK(mixed.reset() == std::vector<ElementId>{0, 1, 2});
    CHECK_FALSE(mixed.done());
    CHECK_THROWS_AS(BlockEngine(0), UsageError);
}

TEST_CASE("the heap overshoots each family's entropy more and more") {
    SuboptimalityReport rep = demonstrate_suboptimality();

    std::vector<SuboptimalityRow> rot = rows_for(rep, "rotation");
    REQUIRE(rot.size() == 5);
    for (std::size_t i = 0; i < rot.size(); ++i) {
        CHECK(rot[i].n == 8 << i);
        CHECK(rot[i].itb_bits == rot[i].n - 1.0);
        if (i > 0) CHECK(rot[i].ratio > rot[i - 1].ratio);
    }
    CHECK(rot.back().ratio >= 3.0);

    std::vector<SuboptimalityRow> mv = rows_for(rep, "front-move");
    REQUIRE(mv.size() == 4);
    for (std::size_t i = 0; i < mv.size(); ++i) {
        CHECK(mv[i].comparisons == mv[i].n - 1.0);
        if (i > 0) CHECK(mv[i].ratio > mv[i - 1].ratio);
    }

    std::vector<SuboptimalityRow> blk = rows_for(rep, "block");
    REQUIRE(blk.size() == 4);
    CHECK(blk[0].n == 4);
    CHECK(blk[0].itb_bits == doctest::Approx(2.0));
    CHECK(blk.back().n == 256);
    for (std::size_t i = 1; i < blk.size(); ++i)
        CHECK(blk[i].ratio > blk[i - 1].ratio);

    // fixed seeds: the table is the same every time
    SuboptimalityReport again = demonstrate_suboptimality();
    REQUIRE(again.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(again.rows[i].comparisons == rep.rows[i].comparisons);
        CHECK(again.rows[i].ratio == rep.rows[i].ratio);
    }

    std::string csv = format_suboptimality_csv(rep);
    CHECK(csv.rfind("family,n,itb_bits,comparisons,ratio\n", 0) == 0);
    CHECK(csv.find("rotation,8,7.000,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long>(rep.rows.size()) + 1);
}

}  // TEST_SUITE
