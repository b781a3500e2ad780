#pragma once

#include <cstdint>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// Partition of the universe by unlock round: front() is available from the
// start, each later layer is what stepping the whole previous prefix
// exposes. Unique per availability structure; exists iff no element is
// permanently blocked.
struct LayerSequence {
    std::vector<std::vector<ElementId>> layers;  // each sorted by id
};

// Consumes one full epoch. Throws StallError when some elements never
// unlock.
LayerSequence compute_layers(Cds& cds);

// The elements that are alone in their layer, in layer order. They appear
// in this order inside every admissible permutation, and with t of them on
// n elements the language holds at least 2^((n-t)/2) permutations.
Word bottleneck_sequence(const LayerSequence& layers);

// Availability restricted to a subset: forwards only kept ids, silently
// stepping the inner structure through everything else as it surfaces.
// Reports keep their original ids; kept ids must be ones the inner
// structure reports. The inner structure must be fresh at init().
class TraceCds : public Cds {
public:
    TraceCds(Cds& inner, std::vector<ElementId> keep);

    int universe_size() const override {
        return static_cast<int>(keep_list_.size());
    }
    int id_bound() const override { return inner_->id_bound(); }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;
    std::uint64_t work() const override { return inner_->work(); }

private:
    // drains non-kept reports in arrival order, collecting kept ones
    std::vector<ElementId> drain(std::vector<ElementId> reported);

    Cds* inner_;
    std::vector<ElementId> keep_list_;
    std::vector<std::uint8_t> keep_;
};

// Smallest index in [lo, hi) whose g-entry follows d in the hidden order,
// or hi when none does. Doubling probes then a binary search; per call the
// oracle is asked at most 2*ceil(log2(gap+1)) + 2 times, gap being the
// distance advanced.
std::size_t exp_search(ElementId d, const Word& g, std::size_t lo,
                       std::size_t hi, const ComparisonOracle& oracle);

// Interleaves two pre-sorted strands into the one admissible permutation
// consistent with both, spending comparisons only when the second strand's
// head is actually available. gamma and delta must partition the universe.
// Throws StallError when neither head is available, MismatchError when the
// oracle orders an unavailable gamma element ahead of an available delta
// head.
Word merge(Cds& cds, const Word& gamma, const Word& delta,
           const ComparisonOracle& oracle);

// Three passes over fresh epochs of the same structure: unlock-round scan,
// subset sort of the non-singleton rounds through TraceCds, then merge.
// Comparison count stays proportional to 1 + log2 of the language size.
// cds_steps counts inner step() calls across all passes; transcript and
// heap metrics, when requested, cover the subset-sorting pass.
SortReport optimal_sort(Cds& cds, const ComparisonOracle& oracle,
                        const SortOptions& opt = {});

}  // namespace antsort
