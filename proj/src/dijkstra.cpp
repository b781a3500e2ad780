#include "antsort/dijkstra.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <set>

namespace antsort {

namespace {

std::vector<std::pair<int, int>> shape_arcs(
    const std::vector<std::tuple<int, int, double>>& arcs) {
    std::vector<std::pair<int, int>> shape;
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v, w] : arcs) {
        if (!(w > 0) || !std::isfinite(w))
            throw InputError("weighted digraph: arc (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") needs a positive finite weight");
        if (u == v) continue;
        if (!seen.insert({u, v}).second)
            throw InputError("weighted digraph: duplicate arc (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
        shape.push_back({u, v});
    }
    return shape;
}

}  // namespace

WeightedDigraph::WeightedDigraph(int n,
                                 const std::vector<std::tuple<int, int, double>>& arcs,
                                 int root)
    : g_(n, shape_arcs(arcs), root, /*directed=*/true) {
    wout_.resize(n);
    for (const auto& [u, v, w] : arcs)
        if (u != v) wout_[u].push_back({v, w});
}

// --- keyed queue ------------------------------------------------------------

bool KeyedHeapAdapter::EntryLess::operator()(int a, int b) const {
    if (q->entry_key_[a] != q->entry_key_[b]) return q->entry_key_[a] < q->entry_key_[b];
    if (q->entry_vertex_[a] != q->entry_vertex_[b])
        return q->entry_vertex_[a] < q->entry_vertex_[b];
    return a < b;
}

KeyedHeapAdapter::KeyedHeapAdapter(int n) : n_(n), heap_(EntryLess{this}) {
    if (n <= 0) throw UsageError("keyed heap: universe must be nonempty");
    key_.assign(n, 0);
    state_.assign(n, 0);
}

std::optional<double> KeyedHeapAdapter::get_key(ElementId v) const {
    if (v < 0 || v >= n_) throw UsageError("keyed heap: vertex out of range");
    if (state_[v] != 1) return std::nullopt;
    return key_[v];
}

void KeyedHeapAdapter::insert(ElementId v, double d) {
    if (v < 0 || v >= n_) throw UsageError("keyed heap: vertex out of range");
    if (state_[v] != 0)
        throw UsageError("keyed heap: vertex " + std::to_string(v) +
                         (state_[v] == 1 ? " is already queued" : " is already finished"));
    state_[v] = 1;
    key_[v] = d;
    ++live_;
    int h = static_cast<int>(entry_key_.size());
    entry_key_.push_back(d);
    entry_vertex_.push_back(v);
    heap_.push(h);
}

void KeyedHeapAdapter::decrease_key(ElementId v, double d) {
    if (v < 0 || v >= n_) throw UsageError("keyed heap: vertex out of range");
    if (state_[v] != 1)
        throw UsageError("keyed heap: decrease-key on a vertex that is not queued");
    if (d > key_[v])
        throw UsageError("keyed heap: decrease-key would increase the key");
    key_[v] = d;
    ++decreases_;
    // the old entry goes stale and gets skipped on extraction
    int h = static_cast<int>(entry_key_.size());
    entry_key_.push_back(d);
    entry_vertex_.push_back(v);
    heap_.push(h);
}

std::pair<ElementId, double> KeyedHeapAdapter::extract_min() {
    while (!heap_.empty()) {
        int h = heap_.pop();
        ElementId v = entry_vertex_[h];
        if (state_[v] != 1 || entry_key_[h] != key_[v]) continue;  // stale
        state_[v] = 2;
        --live_;
        return {v, key_[v]};
    }
    throw UsageError("keyed heap: extract from an empty queue");
}

// --- distance ordering ------------------------------------------------------

DistanceRun dijkstra_order(const WeightedDigraph& g) {
    const int n = g.size();
    DistanceRun run;
    run.dist.assign(n, 0);
    KeyedHeapAdapter q(n);
    std::vector<std::uint8_t> queued(n, 0), done(n, 0);

    auto snap = [&] {
        auto& snapshot = run.transcript.queues.emplace_back();
        for (ElementId v = 0; v < n; ++v)
            if (queued[v] && !done[v]) snapshot.push_back(v);
    };

    q.insert(g.root(), 0);
    queued[g.root()] = 1;
    snap();
    while (!q.empty()) {
        auto [u, d] = q.extract_min();
        done[u] = 1;
        run.order.push_back(u);
        run.dist[u] = d;
        for (const auto& a : g.out(u)) {
            if (done[a.to]) continue;
            auto cur = q.get_key(a.to);
            if (!cur) {
                q.insert(a.to, d + a.w);
                queued[a.to] = 1;
            } else if (d + a.w < *cur) {
                q.decrease_key(a.to, d + a.w);
            }
        }
        snap();
    }
    run.decrease_keys = q.decrease_keys();
    assert(run.decrease_keys <= static_cast<std::uint64_t>(g.arc_count()));
    assert(static_cast<int>(run.order.size()) == n);
    return run;
}

// --- equivalence with the search order --------------------------------------

EquivalenceVerdict check_distance_ordering_equivalence(const RootedGraph& g,
                                                       int weight_trials,
                                                       std::uint64_t seed) {
    const int n = g.size();
    if (n > 7)
        throw LimitError("distance-ordering check enumerates orderings; "
                         "stops at 7 vertices");
    EquivalenceVerdict verdict;
    Alphabet ab = Alphabet::letters(n);

    ExplicitMps search = vertex_search_mps(g);
    LanguageSet lang = enumerate_language(search);
    std::vector<Word> perms = lang.permutations();

    // every search order comes out of some weight function: charge forward
    // jumps by how far they jump and make every backward arc too long to use
    for (const Word& pi : perms) {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[pi[i]] = i;
        std::vector<std::tuple<int, int, double>> arcs;
        for (ElementId u = 0; u < n; ++u)
            for (ElementId v : g.out(u))
                arcs.push_back({u, v, pos[v] > pos[u]
                                          ? static_cast<double>(pos[v] - pos[u])
                                          : static_cast<double>(n)});
        WeightedDigraph wg(n, arcs, g.root());
        DistanceRun run = dijkstra_order(wg);
        ++verdict.cases;
        if (run.order != pi) {
            verdict.ok = false;
            verdict.detail = "ordering " + ab.format_word(pi) +
                             " was not recovered from its own weights";
            return verdict;
        }
        for (int i = 0; i < n; ++i)
            if (run.dist[pi[i]] != i) {
                verdict.ok = false;
                verdict.detail = "ordering " + ab.format_word(pi) +
                                 " recovered with unexpected distances";
                return verdict;
            }
    }

    // and any weight function yields a search order: each vertex popped after
    // one of its in-neighbors, root first
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(1, 10);
    for (int t = 0; t < weight_trials; ++t) {
        std::vector<std::tuple<int, int, double>> arcs;
        for (ElementId u = 0; u < n; ++u)
            for (ElementId v : g.out(u))
                arcs.push_back({u, v, static_cast<double>(weight(rng))});
        WeightedDigraph wg(n, arcs, g.root());
        DistanceRun run = dijkstra_order(wg);
        ++verdict.cases;
        if (!lang.contains(run.order)) {
            verdict.ok = false;
            verdict.detail = "random weights produced " + ab.format_word(run.order) +
                             ", which is not a search order";
            return verdict;
        }
    }
    return verdict;
}

EquivalenceVerdict check_transcript_equivalence(const WeightedDigraph& g) {
    EquivalenceVerdict verdict;
    DistanceRun run = dijkstra_order(g);

    ComparisonOracle oracle(run.order);
    VertexSearchCds cds(g.graph());
    SortOptions opt;
    opt.record_transcript = true;
    SortReport rep = topological_heapsort(cds, oracle, opt);
    ++verdict.cases;

    if (rep.output != run.order) {
        verdict.ok = false;
        verdict.detail = "sort output diverged from the distance ordering";
        return verdict;
    }
    if (!(rep.transcript == run.transcript)) {
        for (size_t i = 0; i < rep.transcript.queues.size(); ++i)
            if (i >= run.transcript.queues.size() ||
                rep.transcript.queues[i] != run.transcript.queues[i]) {
                verdict.ok = false;
                verdict.detail =
                    "queue contents diverged after " + std::to_string(i) + " steps";
                return verdict;
            }
        verdict.ok = false;
        verdict.detail = "transcripts have different lengths";
    }
    return verdict;
}

}  // namespace antsort
