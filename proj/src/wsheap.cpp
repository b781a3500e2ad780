#include "antsort/wsheap.hpp"

#include <cmath>

namespace antsort {

WorkingSetHeap::WorkingSetHeap(const ComparisonOracle& oracle, int id_bound, bool log)
    : oracle_(&oracle), heap_(OracleLess{this}), logging_(log) {
    if (id_bound < 0) throw UsageError("heap: negative id bound");
    present_.assign(id_bound, 0);
    ever_.assign(id_bound, 0);
}

void WorkingSetHeap::insert(ElementId x) {
    if (x < 0 || x >= static_cast<int>(present_.size()))
        throw UsageError("heap: insert of id " + std::to_string(x) + " out of range");
    if (ever_[x])
        throw UsageError("heap: id " + std::to_string(x) + " inserted twice");
    ever_[x] = 1;
    present_[x] = 1;
    ++count_;
    heap_.push(x);
    if (logging_) events_.push_back({true, x});
}

ElementId WorkingSetHeap::extract_min() {
    if (count_ == 0) throw UsageError("heap: extract from empty heap");
    ElementId x = heap_.pop();
    present_[x] = 0;
    --count_;
    if (logging_) events_.push_back({false, x});
    return x;
}

bool WorkingSetHeap::contains(ElementId x) const {
    return x >= 0 && x < static_cast<int>(present_.size()) && present_[x];
}

void WorkingSetHeap::contents(std::vector<ElementId>& out) const {
    out.clear();
    for (std::size_t i = 0; i < present_.size(); ++i)
        if (present_[i]) out.push_back(static_cast<ElementId>(i));
}

HeapMetrics WorkingSetHeap::metrics() const {
    if (!logging_) throw UsageError("heap: metrics need logging enabled");
    HeapMetrics m;
    m.comparisons = comparisons_;
    m.wprime.assign(present_.size(), 0);
    // inserts_before[i] = inserts among events_[0..i-1]
    std::vector<std::uint32_t> inserts_before(events_.size() + 1, 0);
    for (std::size_t i = 0; i < events_.size(); ++i)
        inserts_before[i + 1] = inserts_before[i] + (events_[i].insert ? 1 : 0);
    std::vector<std::uint32_t> born(present_.size(), 0);
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const Event& e = events_[i];
        if (e.insert) {
            born[e.x] = static_cast<std::uint32_t>(i);
        } else {
            m.extracted.push_back(e.x);
            m.wprime[e.x] = inserts_before[i + 1] - inserts_before[born[e.x]];
        }
    }
    // elements still present count inserts up to now
    for (std::size_t x = 0; x < present_.size(); ++x)
        if (present_[x])
            m.wprime[x] = inserts_before.back() - inserts_before[born[x]];
    for (ElementId x : m.extracted)
        m.extracted_log_sum += 1.0 + std::log2(static_cast<double>(m.wprime[x]));
    return m;
}

}  // namespace antsort
