#include "antsort/optimal.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <string>

namespace antsort {

LayerSequence compute_layers(Cds& cds) {
    int n = cds.universe_size();
    LayerSequence out;
    std::vector<ElementId> cur = cds.init();
    std::sort(cur.begin(), cur.end());
    int covered = 0;
    while (!cur.empty()) {
        covered += static_cast<int>(cur.size());
        std::vector<ElementId> next;
        for (ElementId x : cur) {
            std::vector<ElementId> fresh = cds.step(x);
            next.insert(next.end(), fresh.begin(), fresh.end());
        }
        std::sort(next.begin(), next.end());
        out.layers.push_back(std::move(cur));
        cur = std::move(next);
    }
    if (covered < n) {
        Word done;
        for (const auto& layer : out.layers)
            done.insert(done.end(), layer.begin(), layer.end());
        throw StallError("layer pass stalled with " +
                             std::to_string(n - covered) +
                             " elements permanently blocked",
                         std::move(done));
    }
    return out;
}

Word bottleneck_sequence(const LayerSequence& layers) {
    Word out;
    for (const auto& layer : layers.layers)
        if (layer.size() == 1) out.push_back(layer[0]);
    return out;
}

TraceCds::TraceCds(Cds& inner, std::vector<ElementId> keep)
    : inner_(&inner), keep_list_(std::move(keep)) {
    keep_.assign(inner.id_bound(), 0);
    for (ElementId x : keep_list_) {
        if (x < 0 || x >= inner.id_bound() || keep_[x])
            throw UsageError("trace: kept ids must be distinct and in range");
        keep_[x] = 1;
    }
}

std::vector<ElementId> TraceCds::drain(std::vector<ElementId> reported) {
    std::vector<ElementId> out, pending;
    auto absorb = [&](const std::vector<ElementId>& batch) {
        for (ElementId x : batch)
            (keep_[x] ? out : pending).push_back(x);
    };
    absorb(reported);
    for (std::size_t head = 0; head < pending.size(); ++head)
        absorb(inner_->step(pending[head]));
    return out;
}

std::vector<ElementId> TraceCds::init() { return drain(inner_->init()); }

std::vector<ElementId> TraceCds::step(ElementId x) {
    return drain(inner_->step(x));
}

std::size_t exp_search(ElementId d, const Word& g, std::size_t lo,
                       std::size_t hi, const ComparisonOracle& oracle) {
    if (lo >= hi) return hi;
    std::uint64_t asked = oracle.comparisons();
    std::size_t result;
    if (oracle.less(d, g[lo])) {
        result = lo;
    } else {
        // invariant: g[below] precedes d; probe at doubling offsets until
        // d fits, then close the bracket by bisection
        std::size_t below = lo;
        std::size_t offset = 1;
        for (;;) {
            std::size_t probe = lo + offset;
            if (probe >= hi - 1) probe = hi - 1;
            if (probe == below) {  // single candidate left and it precedes d
                result = hi;
                break;
            }
            if (!oracle.less(d, g[probe])) {
                below = probe;
                if (probe == hi - 1) {
                    result = hi;
                    break;
                }
                offset *= 2;
                continue;
            }
            std::size_t above = probe;
            while (below + 1 < above) {
                std::size_t mid = below + (above - below) / 2;
                if (oracle.less(d, g[mid]))
                    above = mid;
                else
                    below = mid;
            }
            result = above;
            break;
        }
    }
    assert(oracle.comparisons() - asked <=
           2 * std::bit_width(static_cast<std::uint64_t>(result - lo)) + 2);
    return result;
}

Word merge(Cds& cds, const Word& gamma, const Word& delta,
           const ComparisonOracle& oracle) {
    std::vector<std::uint8_t> claimed(cds.id_bound(), 0);
    for (ElementId x : gamma) {
        if (x < 0 || x >= cds.id_bound() || claimed[x])
            throw UsageError("merge: strands must partition the universe");
        claimed[x] = 1;
    }
    for (ElementId x : delta) {
        if (x < 0 || x >= cds.id_bound() || claimed[x])
            throw UsageError("merge: strands must partition the universe");
        claimed[x] = 1;
    }
    if (gamma.size() + delta.size() !=
        static_cast<std::size_t>(cds.universe_size()))
        throw UsageError("merge: strands must partition the universe");

    std::vector<std::uint8_t> avail(cds.id_bound(), 0);
    for (ElementId x : cds.init()) avail[x] = 1;
    Word out;
    auto emit = [&](ElementId x) {
        avail[x] = 0;
        out.push_back(x);
        for (ElementId y : cds.step(x)) avail[y] = 1;
    };
    std::size_t i = 0, j = 0;
    const std::size_t k = gamma.size(), l = delta.size();
    while (i < k || j < l) {
        if (j < l && avail[delta[j]]) {
            std::size_t stop = exp_search(delta[j], gamma, i, k, oracle);
            for (; i < stop; ++i) {
                if (!avail[gamma[i]])
                    throw MismatchError(
                        "merge: the oracle placed element " +
                        std::to_string(gamma[i]) +
                        " ahead of an available element, but the "
                        "structure has not released it");
                emit(gamma[i]);
            }
            emit(delta[j]);
            ++j;
        } else if (i < k && avail[gamma[i]]) {
            emit(gamma[i]);
            ++i;
        } else {
            throw StallError("merge: neither strand head is available after " +
                                 std::to_string(out.size()) + " elements",
                             out);
        }
    }
    return out;
}

SortReport optimal_sort(Cds& cds, const ComparisonOracle& oracle,
                        const SortOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t asked = oracle.comparisons();
    ValidatedCds checked(cds);
    Cds& driven = opt.validate ? static_cast<Cds&>(checked) : cds;

    LayerSequence layers = compute_layers(driven);
    Word beta = bottleneck_sequence(layers);
    std::vector<std::uint8_t> in_beta(driven.id_bound(), 0);
    for (ElementId b : beta) in_beta[b] = 1;
    std::vector<ElementId> rest;
    for (const auto& layer : layers.layers)
        for (ElementId x : layer)
            if (!in_beta[x]) rest.push_back(x);
    std::sort(rest.begin(), rest.end());

    SortReport rep;
    Word sorted_rest;
    if (!rest.empty()) {
        TraceCds trace(driven, rest);
        SortReport inner = topological_heapsort(trace, oracle, opt);
        sorted_rest = std::move(inner.output);
        rep.queue_events = inner.queue_events;
        rep.transcript = std::move(inner.transcript);
        rep.heap_metrics = std::move(inner.heap_metrics);
    }

    // the searched strand is the short one: every search advances through
    // the pre-sorted singletons for free
    rep.output = merge(driven, beta, sorted_rest, oracle);
    rep.comparisons = oracle.comparisons() - asked;
    rep.cds_steps = (rest.empty() ? 2 : 3) *
                    static_cast<std::uint64_t>(driven.universe_size());
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

}  // namespace antsort
