#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/errors.hpp"
#include "antsort/graph.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// Arc-weighted digraph with a source everything is reachable from. Weights
// are strictly positive; duplicate arcs would make them ambiguous, so they
// are rejected rather than merged. Self-loops are dropped like RootedGraph
// does (they can never shorten a path).
class WeightedDigraph {
public:
    struct Arc {
        ElementId to;
        double w;
    };

    WeightedDigraph(int n, const std::vector<std::tuple<int, int, double>>& arcs,
                    int root);

    int size() const { return g_.size(); }
    int arc_count() const { return g_.arc_count(); }
    int root() const { return g_.root(); }
    const RootedGraph& graph() const { return g_; }
    const std::vector<Arc>& out(ElementId u) const { return wout_.at(u); }

private:
    RootedGraph g_;
    std::vector<std::vector<Arc>> wout_;
};

// Tentative-distance queue on top of the pairing heap. The heap has no
// native decrease-key, so a decrease pushes a fresh entry and extraction
// skips entries whose key is no longer current. Entries order by
// (key, vertex), so equal distances always resolve toward the smaller id —
// that is the whole tie-break story for the transcript checks. A vertex
// that has been extracted is finished for good; it cannot come back.
class KeyedHeapAdapter {
public:
    explicit KeyedHeapAdapter(int n);

    bool empty() const { return live_ == 0; }
    int len() const { return live_; }

    // the current tentative distance, or nothing if v is not in the queue
    std::optional<double> get_key(ElementId v) const;

    void insert(ElementId v, double d);
    void decrease_key(ElementId v, double d);  // d may equal the current key
    std::pair<ElementId, double> extract_min();

    std::uint64_t decrease_keys() const { return decreases_; }

private:
    struct EntryLess {
        KeyedHeapAdapter* q;
        bool operator()(int a, int b) const;
    };

    int n_ = 0, live_ = 0;
    detail::PairingHeap<EntryLess> heap_;
    std::vector<double> entry_key_;       // by handle
    std::vector<ElementId> entry_vertex_;  // by handle
    std::vector<double> key_;              // by vertex, current tentative
    std::vector<std::uint8_t> state_;      // 0 unseen, 1 queued, 2 finished
    std::uint64_t decreases_ = 0;
};

struct DistanceRun {
    Word order;                // nondecreasing distance, ties by id
    std::vector<double> dist;  // by vertex
    Transcript transcript;     // queue contents after each extraction
    std::uint64_t decrease_keys = 0;
};

// Single-source distance ordering; relaxes every out-arc of each vertex
// exactly once, so no more than arc_count() keys ever decrease.
DistanceRun dijkstra_order(const WeightedDigraph& g);

struct EquivalenceVerdict {
    bool ok = true;
    std::string detail;  // what went wrong, empty when ok
    int cases = 0;       // orderings / weight functions exercised
    explicit operator bool() const { return ok; }
};

// Distance orderings and search orders are the same set: every search
// order is realized by integer weights built from its positions, and every
// run over random weights lands back among the search orders.
EquivalenceVerdict check_distance_ordering_equivalence(
    const RootedGraph& g, int weight_trials = 50, std::uint64_t seed = 1);

// The weighted run and the oracle-driven sort over the same graph see the
// exact same queue contents at every step.
EquivalenceVerdict check_transcript_equivalence(const WeightedDigraph& g);

}  // namespace antsort
