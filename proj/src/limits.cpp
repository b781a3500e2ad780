#include "antsort/limits.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "antsort/wsheap.hpp"

namespace antsort {

namespace {

// drop bit x, close the gap; same index convention the monotone tables use
std::size_t squeeze_mask(ElementId x, Mask chosen) {
    Mask low = chosen & ((Mask{1} << x) - 1);
    Mask high = chosen >> (x + 1);
    return low | (high << x);
}

}  // namespace

std::uint64_t rotation_count(int n) {
    if (n < 1) throw UsageError("rotation family needs n >= 1");
    if (n > 14)
        throw LimitError("rotation family: counts stop at n = 14, got " +
                         std::to_string(n));
    return std::uint64_t{1} << (n - 1);
}

LanguageSet enumerate_rotation(int n) {
    std::uint64_t expect = rotation_count(n);
    std::vector<Word> words;
    for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (n - 1)); ++cuts) {
        Word w;
        int l = 0;
        for (int r = 0; r < n; ++r) {
            // a set bit after position r closes the block l..r
            if (r == n - 1 || ((cuts >> r) & 1u)) {
                w.push_back(r);
                for (int i = l; i < r; ++i) w.push_back(i);
                l = r + 1;
            }
        }
        words.push_back(std::move(w));
    }
    LanguageSet t(n, std::move(words));
    assert(t.size() == expect);  // distinct cut sets give distinct words
    return t;
}

RotationAxiomReport check_rotation_is_greedoid_not_antimatroid(int n) {
    if (n > 7)
        throw LimitError("rotation axiom scan stops at n = 7, got " +
                         std::to_string(n));
    LanguageSet closed = enumerate_rotation(n).prefix_closure();
    return {check_greedoid_axioms(closed), check_antimatroid_axioms(closed)};
}

ExplicitNmps::ExplicitNmps(int n, std::vector<std::vector<std::uint8_t>> tables)
    : n_(n), tables_(std::move(tables)) {
    if (n < 0 || n > kExplicitTableLimit)
        throw LimitError("explicit tables support at most " +
                         std::to_string(kExplicitTableLimit) + " elements, got " +
                         std::to_string(n));
    if (static_cast<int>(tables_.size()) != n)
        throw InputError("explicit tables: need one table per element");
    std::size_t want = n == 0 ? 0 : (std::size_t{1} << (n - 1));
    for (const auto& t : tables_)
        if (t.size() != want)
            throw InputError("explicit tables: table has wrong size");
}

ExplicitNmps ExplicitNmps::from_predicate(
    int n, const std::function<bool(ElementId, Mask)>& pred) {
    if (n < 0 || n > kExplicitTableLimit)
        throw LimitError("explicit tables support at most " +
                         std::to_string(kExplicitTableLimit) + " elements, got " +
                         std::to_string(n));
    std::vector<std::vector<std::uint8_t>> tables(n);
    for (ElementId x = 0; x < n; ++x) {
        tables[x].assign(std::size_t{1} << (n - 1), 0);
        for (Mask m = 0; m < (Mask{1} << n); ++m) {
            if (m & (Mask{1} << x)) continue;
            tables[x][squeeze_mask(x, m)] = pred(x, m) ? 1 : 0;
        }
    }
    return ExplicitNmps(n, std::move(tables));
}

bool ExplicitNmps::eval(ElementId x, Mask chosen_mask) const {
    return tables_.at(x)[squeeze_mask(x, chosen_mask)] != 0;
}

LanguageSet enumerate_nmps_language(const ExplicitNmps& s, int limit) {
    int n = s.size();
    if (n > limit)
        throw LimitError("enumerate_nmps_language: " + std::to_string(n) +
                         " elements exceeds the brute-force limit of " +
                         std::to_string(limit));
    std::vector<Word> words;
    Word cur;
    auto dfs = [&](auto&& self, Mask chosen) -> void {
        words.push_back(cur);
        for (ElementId x = 0; x < n; ++x) {
            if (chosen & (Mask{1} << x)) continue;
            if (!s.eval(x, chosen)) continue;
            cur.push_back(x);
            self(self, chosen | (Mask{1} << x));
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return LanguageSet(n, std::move(words));
}

ExplicitNmps nmps_from_greedoid(const LanguageSet& lang) {
    int n = lang.alphabet_size();
    if (n > kExplicitTableLimit)
        throw LimitError("non-monotone tables stop at " +
                         std::to_string(kExplicitTableLimit) +
                         " elements, got " + std::to_string(n));
    // mark every chosen-set that some word of the language extends with x
    std::vector<std::vector<std::uint8_t>> ok(
        n, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
    for (const Word& w : lang.words()) {
        if (w.empty()) continue;
        ElementId x = w.back();
        Mask pre = support_mask(w) & ~(Mask{1} << x);
        ok[x][pre] = 1;
    }
    return ExplicitNmps::from_predicate(
        n, [&](ElementId x, Mask m) { return ok[x][m] != 0; });
}

LanguageSet single_move_permutations(int n) {
    if (n < 1) throw UsageError("front-move family needs n >= 1");
    if (n > 31)
        throw LimitError("front-move family: explicit words stop at n = 31");
    std::vector<Word> words;
    for (ElementId m = 0; m < n; ++m) {
        Word w{m};
        for (ElementId i = 0; i < n; ++i)
            if (i != m) w.push_back(i);
        words.push_back(std::move(w));
    }
    return LanguageSet(n, std::move(words));
}

ExplicitNmps single_move_nmps(int n) {
    if (n < 1) throw UsageError("front-move family needs n >= 1");
    // x opens a word, or follows once everything before it is in place;
    // availability at the empty set disappears after the first pick, which
    // is exactly the non-monotone part
    return ExplicitNmps::from_predicate(n, [](ElementId x, Mask chosen) {
        Mask before = (Mask{1} << x) - 1;
        return chosen == 0 || (chosen & before) == before;
    });
}

SingleMoveAdversary::SingleMoveAdversary(int n)
    : n_(n), alive_(n, 1), left_(n) {
    if (n < 1) throw UsageError("adversary needs n >= 1");
}

bool SingleMoveAdversary::answer(ElementId a, ElementId b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
        throw UsageError("adversary: compare two distinct elements in range");
    ++queries_;
    // the ascending answer contradicts only the candidate that pulled the
    // later of the two to the front
    int victim = a < b ? b : a;
    last_killed_ = 0;
    if (alive_[victim]) {
        alive_[victim] = 0;
        --left_;
        last_killed_ = 1;
    }
    return a < b;
}

AdversaryRun run_single_move_adversary(int n) {
    SingleMoveAdversary adv(n);
    AdversaryRun run;
    for (ElementId j = 1; j < n; ++j) {
        adv.answer(0, j);
        run.max_killed_by_one_query =
            std::max(run.max_killed_by_one_query, adv.last_killed());
    }
    run.comparisons = adv.queries();
    run.survivors = adv.candidates_left();
    return run;
}

std::uint64_t block_descriptor_count(int k) {
    if (k < 1) throw UsageError("shuffled-block family needs k >= 1");
    if (k > 16)
        throw LimitError("shuffled-block family: counts stop at k = 16");
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return static_cast<std::uint64_t>(k) * f;
}

std::uint64_t block_distinct_count(int k) {
    // the all-ascending word is described once per block
    return block_descriptor_count(k) - static_cast<std::uint64_t>(k - 1);
}

LanguageSet enumerate_block(int k) {
    if (k < 1) throw UsageError("shuffled-block family needs k >= 1");
    if (k > 4)
        throw LimitError("shuffled-block family: explicit words stop at k = 4");
    int n = k * k;
    std::vector<Word> words;
    std::vector<int> slots(k);
    for (int b = 0; b < k; ++b) {
        std::iota(slots.begin(), slots.end(), 0);
        do {
            Word w;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    w.push_back(i == b ? b * k + slots[j] : i * k + j);
            words.push_back(std::move(w));
        } while (std::next_permutation(slots.begin(), slots.end()));
    }
    LanguageSet t(n, std::move(words));
    assert(t.size() == block_distinct_count(k));
    return t;
}

BlockEngine::BlockEngine(int k) : k_(k), n_(k * k) {
    if (k < 1) throw UsageError("shuffled-block engine needs k >= 1");
    reset();
}

std::vector<ElementId> BlockEngine::reset() {
    chosen_.assign(n_, 0);
    block_ = 0;
    taken_in_block_ = 0;
    taken_total_ = 0;
    current_ascending_ = true;
    spent_shuffle_ = false;
    return available();
}

std::vector<ElementId> BlockEngine::available() const {
    std::vector<ElementId> out;
    if (taken_total_ == n_) return out;
    if (spent_shuffle_) {
        // the one shuffle is used up; only the ascending continuation is left
        out.push_back(block_ * k_ + taken_in_block_);
    } else {
        for (int j = 0; j < k_; ++j)
            if (!chosen_[block_ * k_ + j]) out.push_back(block_ * k_ + j);
    }
    return out;
}

std::vector<ElementId> BlockEngine::step(ElementId x) {
    std::vector<ElementId> before = available();
    if (std::find(before.begin(), before.end(), x) == before.end())
        throw UsageError("shuffled-block engine: element " + std::to_string(x) +
                         " is not available");
    if (x % k_ != taken_in_block_) current_ascending_ = false;
    chosen_[x] = 1;
    ++taken_in_block_;
    ++taken_total_;
    if (taken_in_block_ == k_) {
        if (!current_ascending_) spent_shuffle_ = true;
        ++block_;
        taken_in_block_ = 0;
        current_ascending_ = true;
    }
    std::vector<std::uint8_t> old(n_, 0);
    for (ElementId v : before) old[v] = 1;
    std::vector<ElementId> fresh;
    for (ElementId v : available())
        if (!old[v]) fresh.push_back(v);
    return fresh;
}

namespace {

Word random_rotation_word(int n, std::mt19937_64& rng) {
    Word w;
    int l = 0;
    for (int r = 0; r < n; ++r) {
        if (r == n - 1 || (rng() & 1u)) {
            w.push_back(r);
            for (int i = l; i < r; ++i) w.push_back(i);
            l = r + 1;
        }
    }
    return w;
}

// no structure stages these arrivals, so everything lands in the heap up
// front, in whatever order it happens to arrive
std::uint64_t heap_all_at_once(const Word& pi, std::mt19937_64& rng) {
    int n = static_cast<int>(pi.size());
    ComparisonOracle oracle(pi);
    WorkingSetHeap heap(oracle, n);
    Word feed(n);
    std::iota(feed.begin(), feed.end(), 0);
    std::shuffle(feed.begin(), feed.end(), rng);
    for (ElementId x : feed) heap.insert(x);
    for (int i = 0; i < n; ++i) heap.extract_min();
    return heap.comparisons();
}

// drives the heap via the order-sensitive engine, hidden order ascending:
// each block lands as one batch and is sorted back out
std::uint64_t heap_block_run(int k, std::mt19937_64& rng) {
    BlockEngine engine(k);
    int n = engine.size();
    Word pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    ComparisonOracle oracle(pi);
    WorkingSetHeap heap(oracle, n);
    std::vector<ElementId> batch = engine.reset();
    std::shuffle(batch.begin(), batch.end(), rng);
    for (ElementId x : batch) heap.insert(x);
    for (int i = 0; i < n; ++i) {
        ElementId x = heap.extract_min();
        std::vector<ElementId> fresh = engine.step(x);
        std::shuffle(fresh.begin(), fresh.end(), rng);
        for (ElementId y : fresh) heap.insert(y);
    }
    return heap.comparisons();
}

}  // namespace

SuboptimalityReport demonstrate_suboptimality() {
    SuboptimalityReport rep;
    std::mt19937_64 rng(0x5eed);
    const int runs = 5;
    for (int n : {8, 16, 32, 64, 128}) {
        double total = 0;
        for (int r = 0; r < runs; ++r)
            total += static_cast<double>(
                heap_all_at_once(random_rotation_word(n, rng), rng));
        double comps = total / runs;
        double itb = n - 1.0;  // log2 of the family size
        rep.rows.push_back({"rotation", n, itb, comps, comps / itb});
    }
    for (int n : {8, 16, 32, 64}) {
        AdversaryRun run = run_single_move_adversary(n);
        double itb = std::log2(static_cast<double>(n));
        double comps = static_cast<double>(run.comparisons);
        rep.rows.push_back({"front-move", n, itb, comps, comps / itb});
    }
    for (int k : {2, 4, 8, 16}) {
        double total = 0;
        for (int r = 0; r < runs; ++r)
            total += static_cast<double>(heap_block_run(k, rng));
        double comps = total / runs;
        // log2(k * k!); the k-1 duplicate descriptors shave off less than
        // half a bit and only push the ratio down
        double itb = std::log2(static_cast<double>(k)) +
                     std::lgamma(k + 1.0) / std::log(2.0);
        rep.rows.push_back({"block", k * k, itb, comps, comps / itb});
    }
    return rep;
}

std::string format_suboptimality_csv(const SuboptimalityReport& rep) {
    std::string out = "family,n,itb_bits,comparisons,ratio\n";
    char line[128];
    for (const auto& r : rep.rows) {
        std::snprintf(line, sizeof line, "%s,%d,%.3f,%.2f,%.3f\n",
                      r.family.c_str(), r.n, r.itb_bits, r.comparisons,
                      r.ratio);
        out += line;
    }
    return out;
}

}  // namespace antsort
