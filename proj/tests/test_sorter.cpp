#include <doctest.h>

#include <algorithm>
#include <random>

#include "antsort/sorter.hpp"
#include "support.hpp"

using namespace antsort;

namespace {

// forwards to an inner structure but drops every report of one element
struct Muzzled : Cds {
    Cds* inner;
    ElementId gag;
    Muzzled(Cds& c, ElementId g) : inner(&c), gag(g) {}
    int universe_size() const override { return inner->universe_size(); }
    std::vector<ElementId> init() override { return strip(inner->init()); }
    std::vector<ElementId> step(ElementId x) override { return strip(inner->step(x)); }
    std::vector<ElementId> strip(std::vector<ElementId> v) {
        std::erase(v, gag);
        return v;
    }
};

// reports one element a second time on the first step
struct Stutter : Cds {
    Cds* inner;
    Stutter(Cds& c) : inner(&c) {}
    int universe_size() const override { return inner->universe_size(); }
    std::vector<ElementId> init() override {
        first_ = true;
        return inner->init();
    }
    std::vector<ElementId> step(ElementId x) override {
        auto v = inner->step(x);
        if (first_) {
            first_ = false;
            v.push_back(x);  // x was just chosen; reporting it again is a lie
        }
        return v;
    }
    bool first_ = true;
};

}  // namespace

TEST_SUITE("sorter") {

TEST_CASE("reference structure replays the three-element example") {
    ExplicitMps s = support::example2();
    ExplicitMpsCds cds(s);
    CHECK(validate_cds(cds, s));
}

TEST_CASE("sort recovers every admissible hidden order") {
    ExplicitMps s = support::example2();
    ExplicitMpsCds cds(s);
    for (const Word& pi : support::example2_perms()) {
        ComparisonOracle oracle(pi);
        SortReport rep = topological_heapsort(cds, oracle);
        CHECK(rep.output == pi);
        CHECK(rep.cds_steps == 3);
        CHECK(rep.queue_events == 6);
    }
}

TEST_CASE("inadmissible hidden orders still yield admissible output") {
    ExplicitMps s = support::example2();
    ExplicitMpsCds cds(s);
    const auto& perms = support::example2_perms();
    Word all = {0, 1, 2};
    std::sort(all.begin(), all.end());
    do {
        ComparisonOracle oracle(all);
        SortReport rep = topological_heapsort(cds, oracle);
        bool admissible =
            std::find(perms.begin(), perms.end(), all) != perms.end();
        bool output_admissible =
            std::find(perms.begin(), perms.end(), rep.output) != perms.end();
        CHECK(output_admissible);
        CHECK((rep.output == all) == admissible);
    } while (std::next_permutation(all.begin(), all.end()));
}

TEST_CASE("transcript of the acb run") {
    ExplicitMps s = support::example2();
    ExplicitMpsCds cds(s);
    ComparisonOracle oracle({0, 2, 1});  // a c b
    SortOptions opt;
    opt.record_transcript = true;
    SortReport rep = topological_heapsort(cds, oracle, opt);
    CHECK(rep.output == Word{0, 2, 1});
    Transcript expect;
    expect.queues = {{0, 1}, {1, 2}, {1}, {}};
    CHECK(rep.transcript == expect);
    CHECK(transcript_invariants_ok(rep.transcript, rep.output));
}

TEST_CASE("transcript invariants fail on doctored queues") {
    Transcript t;
    t.queues = {{0, 1}, {0, 1}, {}};  // 0 lingers after extraction
    CHECK(!transcript_invariants_ok(t, {0, 1}));
    Transcript wrong_len;
    wrong_len.queues = {{0}};
    CHECK(!transcript_invariants_ok(wrong_len, {0}));
}

TEST_CASE("a stall names the emitted prefix") {
    // c is never available
    ExplicitMps s = ExplicitMps::from_predicate(3, [](ElementId x, Mask) {
        return x != 2;
    });
    ExplicitMpsCds cds(s);
    ComparisonOracle oracle({0, 1, 2});
    try {
        topological_heapsort(cds, oracle);
        FAIL("expected a stall");
    } catch (const StallError& e) {
        CHECK(e.prefix == std::vector<int>{0, 1});
    }
}

TEST_CASE("empty and singleton universes") {
    ExplicitMps none = ExplicitMps::from_predicate(0, [](ElementId, Mask) { return true; });
    ExplicitMpsCds cds0(none);
    ComparisonOracle o0{Word{}};
    SortOptions opt;
    opt.record_transcript = true;
    SortReport rep0 = topological_heapsort(cds0, o0, opt);
    CHECK(rep0.output.empty());
    CHECK(rep0.comparisons == 0);
    CHECK(rep0.transcript.queues.size() == 1);

    ExplicitMps one = support::free_mps(1);
    ExplicitMpsCds cds1(one);
    ComparisonOracle o1{Word{0}};
    SortReport rep1 = topological_heapsort(cds1, o1);
    CHECK(rep1.output == Word{0});
    CHECK(rep1.comparisons == 0);
}

TEST_CASE("the validation wrapper catches contract breaks") {
    ExplicitMps s = support::example2();

    SUBCASE("stepping an unavailable element") {
        ExplicitMpsCds cds(s);
        ValidatedCds v(cds);
        v.init();
        CHECK_THROWS_AS(v.step(2), ContractError);  // c is not available yet
    }
    SUBCASE("stepping before init") {
        ExplicitMpsCds cds(s);
        ValidatedCds v(cds);
        CHECK_THROWS_AS(v.step(0), ContractError);
    }
    SUBCASE("stepping a chosen element twice") {
        ExplicitMpsCds cds(s);
        ValidatedCds v(cds);
        v.init();
        v.step(0);
        CHECK_THROWS_AS(v.step(0), ContractError);
    }
    SUBCASE("duplicate reports surface through the sort") {
        ExplicitMpsCds cds(s);
        Stutter bad(cds);
        ComparisonOracle oracle({0, 1, 2});
        CHECK_THROWS_AS(topological_heapsort(bad, oracle), ContractError);
    }
}

TEST_CASE("replay validation flags a silenced report") {
    ExplicitMps s = support::example2();
    ExplicitMpsCds good(s);
    Muzzled bad(good, 2);
    ValidateResult res = validate_cds(bad, s);
    CHECK(!res.ok);
    CHECK(res.expected == std::vector<ElementId>{1, 2});
    CHECK(res.got == std::vector<ElementId>{1});
    CHECK(res.word == Word{0});  // first word whose continuation set is wrong
}

TEST_CASE("replay validation passes the reference structure broadly") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        ExplicitMps s = support::random_anchor_mps(n, rng);
        ExplicitMpsCds cds(s);
        CHECK(validate_cds(cds, s));
    }
}

TEST_CASE("sorting twice is bit-for-bit deterministic") {
    ExplicitMps s = support::chain(6);
    ExplicitMpsCds cds(s);
    ComparisonOracle o1(support::identity_word(6));
    ComparisonOracle o2(support::identity_word(6));
    SortOptions opt;
    opt.record_transcript = true;
    SortReport a = topological_heapsort(cds, o1, opt);
    SortReport b = topological_heapsort(cds, o2, opt);
    CHECK(a.output == b.output);
    CHECK(a.comparisons == b.comparisons);
    CHECK(a.transcript == b.transcript);
}

}  // TEST_SUITE
