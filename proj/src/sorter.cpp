#include "antsort/sorter.hpp"

#include <algorithm>
#include <chrono>

namespace antsort {

ValidatedCds::ValidatedCds(Cds& inner) : inner_(&inner) {}

void ValidatedCds::absorb(const std::vector<ElementId>& reported) {
    for (ElementId y : reported) {
        if (y < 0 || y >= id_bound())
            throw ContractError("cds reported id " + std::to_string(y) + " out of range");
        if (seen_[y])
            throw ContractError("cds reported element " + std::to_string(y) + " twice");
        seen_[y] = 1;
        available_[y] = 1;
        ++reported_count_;
        if (reported_count_ > universe_size())
            throw ContractError("cds reported more elements than its universe holds");
    }
}

std::vector<ElementId> ValidatedCds::init() {
    started_ = true;
    reported_count_ = 0;
    available_.assign(id_bound(), 0);
    chosen_.assign(id_bound(), 0);
    seen_.assign(id_bound(), 0);
    auto r = inner_->init();
    absorb(r);
    return r;
}

std::vector<ElementId> ValidatedCds::step(ElementId x) {
    if (!started_) throw ContractError("cds stepped before init");
    if (x < 0 || x >= id_bound())
        throw ContractError("cds stepped with id out of range");
    if (chosen_[x])
        throw ContractError("cds stepped on already chosen element " + std::to_string(x));
    if (!available_[x])
        throw ContractError("cds stepped on unavailable element " + std::to_string(x));
    chosen_[x] = 1;
    available_[x] = 0;
    auto r = inner_->step(x);
    absorb(r);
    return r;
}

std::vector<ElementId> ExplicitMpsCds::init() {
    chosen_ = 0;
    reported_ = 0;
    std::vector<ElementId> out;
    for (ElementId x = 0; x < s_->size(); ++x)
        if (s_->eval(x, 0)) {
            out.push_back(x);
            reported_ |= Mask{1} << x;
        }
    return out;
}

std::vector<ElementId> ExplicitMpsCds::step(ElementId x) {
    chosen_ |= Mask{1} << x;
    std::vector<ElementId> out;
    for (ElementId y = 0; y < s_->size(); ++y) {
        if ((chosen_ | reported_) & (Mask{1} << y)) continue;
        if (s_->eval(y, chosen_)) {
            out.push_back(y);
            reported_ |= Mask{1} << y;
        }
    }
    return out;
}

bool transcript_invariants_ok(const Transcript& t, const Word& output) {
    if (t.queues.size() != output.size() + 1) return false;
    for (std::size_t i = 0; i < output.size(); ++i) {
        ElementId x = output[i];
        const auto& before = t.queues[i];
        if (!std::binary_search(before.begin(), before.end(), x)) return false;
        for (std::size_t j = i + 1; j < t.queues.size(); ++j)
            if (std::binary_search(t.queues[j].begin(), t.queues[j].end(), x))
                return false;
    }
    return true;
}

SortReport topological_heapsort(Cds& cds, const ComparisonOracle& oracle,
                                const SortOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    SortReport rep;
    ValidatedCds guard(cds);
    Cds& c = opt.validate ? static_cast<Cds&>(guard) : cds;
    const int n = c.universe_size();
    WorkingSetHeap heap(oracle, c.id_bound(), opt.heap_log);
    std::uint64_t cmp0 = oracle.comparisons();

    double cds_ns = 0;
    auto timed = [&](auto&& f) {
        auto s = std::chrono::steady_clock::now();
        auto r = f();
        cds_ns += std::chrono::duration<double, std::nano>(
                      std::chrono::steady_clock::now() - s)
                      .count();
        return r;
    };

    auto feed = [&](const std::vector<ElementId>& batch) {
        for (ElementId y : batch) {
            heap.insert(y);
            ++rep.queue_events;
        }
    };
    feed(timed([&] { return c.init(); }));

    auto snap = [&] {
        if (!opt.record_transcript) return;
        rep.transcript.queues.emplace_back();
        heap.contents(rep.transcript.queues.back());
    };
    snap();

    rep.output.reserve(n);
    while (!heap.empty()) {
        ElementId x = heap.extract_min();
        ++rep.queue_events;
        rep.output.push_back(x);
        ++rep.cds_steps;
        feed(timed([&] { return c.step(x); }));
        snap();
    }
    if (static_cast<int>(rep.output.size()) < n)
        throw StallError("sort stalled after " + std::to_string(rep.output.size()) +
                             " of " + std::to_string(n) + " elements",
                         rep.output);

    rep.comparisons = oracle.comparisons() - cmp0;
    if (opt.heap_log) rep.heap_metrics = heap.metrics();
    rep.cds_seconds = cds_ns * 1e-9;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ValidateResult validate_cds(Cds& cds, const ExplicitMps& truth, int limit) {
    ValidateResult res;
    LanguageSet lang = enumerate_language(truth, limit);
    std::vector<ElementId> avail, got;
    for (const Word& w : lang.words()) {
        // availability reported by the structure after replaying w
        got.clear();
        for (ElementId y : cds.init()) got.push_back(y);
        for (ElementId x : w) {
            std::erase(got, x);
            for (ElementId y : cds.step(x)) got.push_back(y);
        }
        std::sort(got.begin(), got.end());
        // ground truth: continuations of w under the tables
        avail.clear();
        Mask chosen = support_mask(w);
        for (ElementId y = 0; y < truth.size(); ++y) {
            if (chosen & (Mask{1} << y)) continue;
            if (truth.eval(y, chosen)) avail.push_back(y);
        }
        if (got != avail) {
            res.ok = false;
            res.word = w;
            res.expected = avail;
            res.got = got;
            res.detail = "availability diverges from the tables after this word";
            return res;
        }
    }
    return res;
}

}  // namespace antsort
