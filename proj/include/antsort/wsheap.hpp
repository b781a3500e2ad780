#pragma once

#include <cstdint>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/errors.hpp"

namespace antsort {

namespace detail {

// Two-pass pairing heap over dense integer handles. Structure lives in
// flat child/sibling arrays; the caller owns handle meaning and keys.
// Less(a, b) must stay a strict total order on live handles.
template <class Less>
class PairingHeap {
public:
    explicit PairingHeap(Less less) : less_(std::move(less)) {}

    bool empty() const { return root_ < 0; }

    void push(int h) {
        ensure(h);
        child_[h] = -1;
        sibling_[h] = -1;
        root_ = root_ < 0 ? h : link(root_, h);
    }

    int top() const { return root_; }

    int pop() {
        int r = root_;
        kids_.clear();
        for (int c = child_[r]; c >= 0;) {
            int next = sibling_[c];
            sibling_[c] = -1;
            kids_.push_back(c);
            c = next;
        }
        child_[r] = -1;
        // pass 1: pair the children oldest to newest (the child list keeps
        // newest first, so walk it backwards); pairing in age order keeps
        // sorted-run feeds near-linear instead of rebuilding a star
        winners_.clear();
        int m = static_cast<int>(kids_.size());
        for (int i = m - 1; i > 0; i -= 2) winners_.push_back(link(kids_[i], kids_[i - 1]));
        if (m % 2) winners_.push_back(kids_[0]);
        // pass 2: fold the pair winners back toward the oldest end
        int acc = -1;
        for (auto it = winners_.rbegin(); it != winners_.rend(); ++it)
            acc = acc < 0 ? *it : link(*it, acc);
        root_ = acc;
        return r;
    }

private:
    int link(int a, int b) {
        if (less_(b, a)) std::swap(a, b);
        sibling_[b] = child_[a];
        child_[a] = b;
        return a;
    }

    void ensure(int h) {
        if (h >= static_cast<int>(child_.size())) {
            child_.resize(h + 1, -1);
            sibling_.resize(h + 1, -1);
        }
    }

    Less less_;
    int root_ = -1;
    std::vector<int> child_, sibling_;
    std::vector<int> kids_, winners_;
};

}  // namespace detail

struct HeapMetrics {
    std::uint64_t comparisons = 0;
    std::vector<ElementId> extracted;      // in extraction order
    std::vector<std::uint32_t> wprime;     // by id; 0 for never-inserted ids
    double extracted_log_sum = 0;          // sum of 1 + log2(w') over extracted
};

// Min-heap keyed by the oracle's hidden order. Each id may be inserted at
// most once over the heap's lifetime; pairing-heap extraction cost then
// tracks how long an element sat in the queue, which is what the sort's
// comparison bound leans on. With logging on, metrics() reports for each
// element the number of inserts that happened while it was present.
class WorkingSetHeap {
public:
    WorkingSetHeap(const ComparisonOracle& oracle, int id_bound, bool log = false);

    void insert(ElementId x);
    ElementId extract_min();

    bool empty() const { return count_ == 0; }
    int len() const { return count_; }
    bool contains(ElementId x) const;
    std::uint64_t comparisons() const { return comparisons_; }

    // present ids, ascending (not extraction order)
    void contents(std::vector<ElementId>& out) const;

    HeapMetrics metrics() const;

private:
    struct OracleLess {
        WorkingSetHeap* h;
        bool operator()(int a, int b) const {
            ++h->comparisons_;
            return h->oracle_->less(a, b);
        }
    };

    struct Event {
        bool insert;
        ElementId x;
    };

    const ComparisonOracle* oracle_;
    detail::PairingHeap<OracleLess> heap_;
    std::vector<std::uint8_t> present_, ever_;
    int count_ = 0;
    std::uint64_t comparisons_ = 0;
    bool logging_;
    std::vector<Event> events_;
};

}  // namespace antsort
