#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/wsheap.hpp"

namespace antsort {

// Incremental availability reporter. init() resets the chosen set to empty
// and reports everything available from scratch; step(x) adds x and reports
// exactly the elements that became available because of x. Each element is
// reported at most once per epoch. Stepping an element that is not
// currently available is undefined here; wrap in ValidatedCds to make it
// throw instead.
class Cds {
public:
    virtual ~Cds() = default;

    // number of elements this structure will report over a full run
    virtual int universe_size() const = 0;

    // exclusive upper bound on ids it may report (== universe_size unless
    // the structure restricts a larger ground set)
    virtual int id_bound() const { return universe_size(); }

    virtual std::vector<ElementId> init() = 0;
    virtual std::vector<ElementId> step(ElementId x) = 0;

    // internal work units consumed so far, for the linear-time assertions
    virtual std::uint64_t work() const { return 0; }
};

// Enforces the reporting contract at runtime: init before step, steps only
// on available unchosen elements, no duplicate reports, no more reports
// than the universe holds.
class ValidatedCds : public Cds {
public:
    explicit ValidatedCds(Cds& inner);

    int universe_size() const override { return inner_->universe_size(); }
    int id_bound() const override { return inner_->id_bound(); }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;
    std::uint64_t work() const override { return inner_->work(); }

private:
    void absorb(const std::vector<ElementId>& reported);

    Cds* inner_;
    bool started_ = false;
    int reported_count_ = 0;
    std::vector<std::uint8_t> available_, chosen_, seen_;
};

// Reference structure driven directly by explicit availability tables.
// Quadratic per run and proud of it; everything else is checked against it.
class ExplicitMpsCds : public Cds {
public:
    explicit ExplicitMpsCds(const ExplicitMps& s) : s_(&s) {}

    int universe_size() const override { return s_->size(); }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;

private:
    const ExplicitMps* s_;
    Mask chosen_ = 0, reported_ = 0;
};

// Queue contents after init (index 0) and after each extract+report round.
// Each snapshot is sorted by id.
struct Transcript {
    std::vector<std::vector<ElementId>> queues;
    bool operator==(const Transcript&) const = default;
};

// x_i must sit in queue i-1 and in no queue from i on
bool transcript_invariants_ok(const Transcript& t, const Word& output);

struct SortOptions {
    bool validate = true;          // wrap the structure in ValidatedCds
    bool record_transcript = false;
    bool heap_log = false;         // keep the heap op log for metrics
};

struct SortReport {
    Word output;
    std::uint64_t comparisons = 0;
    std::uint64_t cds_steps = 0;
    std::uint64_t queue_events = 0;  // inserts + extracts
    std::optional<double> itb;
    double wall_seconds = 0;
    double cds_seconds = 0;
    Transcript transcript;           // empty unless recorded
    std::optional<HeapMetrics> heap_metrics;
};

// The sort loop: prime the queue from init(), then repeatedly extract the
// oracle-minimum and feed its newly available elements back in. Output is
// the hidden order restricted to the structure's universe whenever that
// order is admissible; a stall (elements left but queue empty) throws
// StallError naming the emitted prefix.
SortReport topological_heapsort(Cds& cds, const ComparisonOracle& oracle,
                                const SortOptions& opt = {});

struct ValidateResult {
    bool ok = true;
    Word word;                       // replayed word at the first mismatch
    std::vector<ElementId> expected; // availability the tables dictate
    std::vector<ElementId> got;      // availability the structure reported
    std::string detail;
    explicit operator bool() const { return ok; }
};

// Replays every word of the table-generated language into the structure and
// compares cumulative reported availability with the tables' ground truth
// after each word. The replay drives the structure raw (no validation
// wrapper), so a broken structure shows up as a mismatch, not a throw.
ValidateResult validate_cds(Cds& cds, const ExplicitMps& truth,
                            int limit = kBruteForceLimit);

}  // namespace antsort
