#include <doctest.h>

#include <algorithm>

#include "antsort/core.hpp"
#include "support.hpp"

using namespace antsort;

TEST_SUITE("core") {

TEST_CASE("alphabet names and lookup") {
    Alphabet ab({"a", "b", "c"});
    CHECK(ab.size() == 3);
    CHECK(ab.name(1) == "b");
    CHECK(ab.find("c") == ElementId{2});
    CHECK(!ab.find("d").has_value());
    CHECK(ab.format_word({1, 2, 0}) == "bca");
    CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
    CHECK_THROWS_AS(Alphabet({""}), InputError);

    Alphabet spaced({"s", "t1"});
    CHECK(spaced.format_word({0, 1}) == "s t1");
}

TEST_CASE("words and supports") {
    CHECK(is_simple({}));
    CHECK(is_simple({0, 2, 1}));
    CHECK(!is_simple({0, 2, 0}));
    CHECK(support_mask({0, 2}) == 0b101);
    CHECK(support_mask({}) == 0);
}

TEST_CASE("oracle answers and counts") {
    ComparisonOracle o({2, 0, 1});  // hidden order: c a b
    CHECK(o.comparisons() == 0);
    CHECK(o.less(2, 0));
    CHECK(o.less(0, 1));
    CHECK(!o.less(1, 2));
    CHECK(o.comparisons() == 3);
    CHECK_THROWS_AS(o.less(1, 1), UsageError);
    CHECK(o.comparisons() == 3);  // the rejected query is not billed
    CHECK(o.rank(2) == 0);
}

TEST_CASE("oracle log replay stays consistent") {
    ComparisonOracle o({1, 0, 3, 2});
    o.enable_log();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        int a = static_cast<int>(rng() % 4);
        int b = static_cast<int>(rng() % 4);
        if (a == b) continue;
        o.less(a, b);
    }
    CHECK(o.replay_log_consistent());
}

TEST_CASE("oracle rejects non-permutations") {
    CHECK_THROWS_AS(ComparisonOracle({0, 0, 1}), InputError);
    CHECK_THROWS_AS(ComparisonOracle({0, 3}), InputError);
}

TEST_CASE("explicit tables evaluate the three-element example") {
    ExplicitMps s = support::example2();
    CHECK(s.size() == 3);
    CHECK(evaluate_mps(s, 0, 0));
    CHECK(evaluate_mps(s, 1, 0));
    CHECK(!evaluate_mps(s, 2, 0));        // c needs a or b first
    CHECK(evaluate_mps(s, 2, 0b001));     // {a}
    CHECK(evaluate_mps(s, 2, 0b010));     // {b}
    CHECK(evaluate_mps(s, 2, 0b011));
    CHECK_THROWS_AS(evaluate_mps(s, 2, 0b100), UsageError);  // c already chosen
    CHECK_THROWS_AS(evaluate_mps(s, 3, 0), UsageError);
}

TEST_CASE("non-monotone tables are rejected at construction") {
    // availability that disappears when the set grows
    CHECK_THROWS_AS(ExplicitMps::from_predicate(
                        3, [](ElementId x, Mask chosen) {
                            if (x == 2) return chosen == 0;
                            return true;
                        }),
                    InputError);
}

TEST_CASE("oversized tables are refused") {
    CHECK_THROWS_AS(ExplicitMps::from_predicate(
                        17, [](ElementId, Mask) { return true; }),
                    LimitError);
}

TEST_CASE("enumeration of the three-element example") {
    LanguageSet lang = enumerate_language(support::example2());
    // eleven words: every prefix of the four admissible permutations
    std::vector<Word> expect = {
        {},        {0},       {0, 1},    {0, 1, 2}, {0, 2},    {0, 2, 1},
        {1},       {1, 0},    {1, 0, 2}, {1, 2},    {1, 2, 0}};
    CHECK(lang.words() == expect);
    CHECK(lang.permutations() == support::example2_perms());
    CHECK(lang.permutation_count() == 4);
    CHECK(itb_bits(lang) == doctest::Approx(2.0));
    CHECK(lang.contains({1, 0}));
    CHECK(!lang.contains({2}));
}

TEST_CASE("enumeration respects the brute-force limit") {
    ExplicitMps big = support::free_mps(11);
    CHECK_THROWS_AS(enumerate_language(big), LimitError);
    // raising the limit explicitly is allowed
    CHECK_NOTHROW(enumerate_language(support::free_mps(6), 6));
}

TEST_CASE("empty alphabet is legal") {
    ExplicitMps s = ExplicitMps::from_predicate(0, [](ElementId, Mask) { return true; });
    LanguageSet lang = enumerate_language(s);
    CHECK(lang.size() == 1);  // just the empty word
    CHECK(lang.permutation_count() == 1);
    CHECK(itb_bits(lang) == doctest::Approx(0.0));
    CHECK(check_antimatroid_axioms(lang));
}

TEST_CASE("language construction validates words") {
    CHECK_THROWS_AS(LanguageSet(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(LanguageSet(2, {{0, 5}}), InputError);
    LanguageSet dedup(2, {{0}, {0}, {}});
    CHECK(dedup.size() == 2);
}

TEST_CASE("axioms hold for generated languages") {
    CHECK(check_antimatroid_axioms(enumerate_language(support::example2())));
    CHECK(check_antimatroid_axioms(enumerate_language(support::chain(4))));
    CHECK(check_antimatroid_axioms(enumerate_language(support::free_mps(4))));
    // every antimatroid is a greedoid
    CHECK(check_greedoid_axioms(enumerate_language(support::example2())));
}

TEST_CASE("axiom violations come with witnesses") {
    AxiomVerdict empty = check_antimatroid_axioms(LanguageSet(2, {}));
    CHECK(!empty.ok);
    CHECK(empty.reason == "language is empty");

    // two starts but no continuation: exchange fails
    AxiomVerdict ex = check_antimatroid_axioms(LanguageSet(2, {{}, {0}, {1}}));
    CHECK(!ex.ok);
    CHECK(ex.alpha == Word{0});
    CHECK(ex.beta == Word{1});

    // missing prefix
    AxiomVerdict pre = check_antimatroid_axioms(LanguageSet(2, {{}, {0, 1}}));
    CHECK(!pre.ok);
    CHECK(pre.reason == "not prefix-closed");
    CHECK(pre.alpha == Word{0, 1});
}

TEST_CASE("greedoid but not antimatroid") {
    // rotations of abc by blocks: cab, acb, bac, abc (plus prefixes)
    LanguageSet rot = LanguageSet(3, {{2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}})
                          .prefix_closure();
    CHECK(check_greedoid_axioms(rot));
    AxiomVerdict v = check_antimatroid_axioms(rot);
    CHECK(!v.ok);
}

TEST_CASE("tables rebuilt from a language reproduce it") {
    LanguageSet lang = enumerate_language(support::example2());
    ExplicitMps back = mps_from_language(lang);
    CHECK(!back.eval(2, 0));
    CHECK(back.eval(2, 0b001));
    CHECK(back.eval(2, 0b010));
    CHECK(enumerate_language(back).words() == lang.words());

    LanguageSet chain_lang = enumerate_language(support::chain(5));
    CHECK(enumerate_language(mps_from_language(chain_lang)).words() ==
          chain_lang.words());
}

TEST_CASE("unused elements stay unavailable after the round trip") {
    // b never occurs; the rebuilt table must keep it locked
    LanguageSet lang(2, {{}, {0}});
    ExplicitMps back = mps_from_language(lang);
    CHECK(!back.eval(1, 0));
    CHECK(!back.eval(1, 0b01));
    CHECK(enumerate_language(back).words() == lang.words());
}

TEST_CASE("itb needs at least one full-length word") {
    CHECK_THROWS_AS(itb_bits(LanguageSet(2, {{}, {0}})), InputError);
}

TEST_CASE("prefix closure fills in the gaps") {
    LanguageSet perms(2, {{0, 1}, {1, 0}});
    LanguageSet closed = perms.prefix_closure();
    CHECK(closed.size() == 5);
    CHECK(closed.contains({}));
    CHECK(closed.contains({1}));
}

}  // TEST_SUITE
