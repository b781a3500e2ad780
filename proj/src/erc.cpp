#include "antsort/erc.hpp"

#include <algorithm>
#include <numeric>

namespace antsort {
namespace {

void canonicalize(std::vector<ElementId>& side, int n, int idx,
                  const char* which) {
    for (ElementId x : side)
        if (x < 0 || x >= n)
            throw InputError("constraint " + std::to_string(idx) + ": " +
                             which + "-side element " + std::to_string(x) +
                             " out of range");
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
}

}  // namespace

ErcSet::ErcSet(int n, std::vector<Erc> ercs) : n_(n) {
    int idx = 0;
    for (Erc& e : ercs) {
        canonicalize(e.a, n, idx, "a");
        canonicalize(e.b, n, idx, "b");
        if (e.b.empty()) {
            ++dropped_;
            ++idx;
            continue;
        }
        if (e.a.empty())
            throw InputError("constraint " + std::to_string(idx) +
                             ": empty a side permanently blocks element " +
                             std::to_string(e.b.front()));
        std::vector<ElementId> both;
        std::set_intersection(e.a.begin(), e.a.end(), e.b.begin(), e.b.end(),
                              std::back_inserter(both));
        if (!both.empty())
            throw InputError("constraint " + std::to_string(idx) +
                             ": element " + std::to_string(both.front()) +
                             " on both sides");
        ercs_.push_back(std::move(e));
        ++idx;
    }
}

std::uint64_t ErcSet::input_size() const {
    std::uint64_t total = 0;
    for (const Erc& e : ercs_) total += e.a.size() + e.b.size();
    return total;
}

ErcCds::ErcCds(const ErcSet& es) : n_(es.alphabet_size()) {
    in_a_.resize(n_);
    base_blockers_.assign(n_, 0);
    int idx = 0;
    for (const Erc& e : es.ercs()) {
        for (ElementId x : e.a) in_a_[x].push_back(idx);
        for (ElementId x : e.b) ++base_blockers_[x];
        bs_.push_back(e.b);
        ++idx;
    }
}

std::vector<ElementId> ErcCds::init() {
    started_ = true;
    work_ = 0;
    blockers_ = base_blockers_;
    retired_.assign(bs_.size(), 0);
    std::vector<ElementId> out;
    for (ElementId x = 0; x < n_; ++x)
        if (blockers_[x] == 0) out.push_back(x);
    return out;
}

std::vector<ElementId> ErcCds::step(ElementId x) {
    if (!started_) throw UsageError("erc cds: step before init");
    if (x < 0 || x >= n_) throw UsageError("erc cds: element out of range");
    std::vector<ElementId> out;
    for (int idx : in_a_[x]) {
        ++work_;
        if (retired_[idx]) continue;
        retired_[idx] = 1;
        for (ElementId y : bs_[idx]) {
            ++work_;
            if (--blockers_[y] == 0) out.push_back(y);
        }
    }
    return out;
}

ExplicitMps mps_from_ercs(const ErcSet& es) {
    const auto& ercs = es.ercs();
    return ExplicitMps::from_predicate(
        es.alphabet_size(), [&](ElementId x, Mask chosen) {
            for (const Erc& e : ercs) {
                if (!std::binary_search(e.b.begin(), e.b.end(), x)) continue;
                bool hit = false;
                for (ElementId a : e.a)
                    if ((chosen >> a) & 1u) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
            return true;
        });
}

ErcSet ercs_from_mps(const ExplicitMps& s) {
    int n = s.size();
    std::vector<Erc> ercs;
    for (ElementId x = 0; x < n; ++x) {
        Mask full = (Mask{1} << n) - 1;
        Mask others = full & ~(Mask{1} << x);
        for (Mask m = 0;; m = ((m | ~others) + 1) & others) {
            if (!s.eval(x, m)) {
                bool is_maximal = true;
                for (int b = 0; b < n && is_maximal; ++b)
                    if (((others >> b) & 1u) && !((m >> b) & 1u))
                        if (!s.eval(x, m | (Mask{1} << b))) is_maximal = false;
                if (is_maximal) {
                    Erc e;
                    e.b.push_back(x);
                    for (int b = 0; b < n; ++b)
                        if (((others >> b) & 1u) && !((m >> b) & 1u))
                            e.a.push_back(b);
                    ercs.push_back(std::move(e));
                }
            }
            if (m == others) break;
        }
    }
    return ErcSet(n, std::move(ercs));
}

SemanticsVerdict erc_semantics_check(const ErcSet& es, int limit) {
    int n = es.alphabet_size();
    if (n > limit)
        throw LimitError("semantics check needs all " + std::to_string(n) +
                         "! permutations; raise the limit to allow n > " +
                         std::to_string(limit));
    Word perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> pos(n);
    std::vector<Word> consistent;
    do {
        for (int i = 0; i < n; ++i) pos[perm[i]] = i;
        bool all_ok = true;
        int idx = 0;
        for (const Erc& e : es.ercs()) {
            // every b-member has an earlier a-member
            bool forall_b = true;
            for (ElementId b : e.b) {
                bool found = false;
                for (ElementId a : e.a)
                    if (pos[a] < pos[b]) {
                        found = true;
                        break;
                    }
                if (!found) {
                    forall_b = false;
                    break;
                }
            }
            // some a-member is earlier than every b-member
            bool exists_a = false;
            for (ElementId a : e.a) {
                bool before_all = true;
                for (ElementId b : e.b)
                    if (pos[a] > pos[b]) {
                        before_all = false;
                        break;
                    }
                if (before_all) {
                    exists_a = true;
                    break;
                }
            }
            if (forall_b != exists_a) {
                SemanticsVerdict v;
                v.ok = false;
                v.detail = "constraint " + std::to_string(idx) +
                           ": the two satisfaction readings disagree on";
                for (ElementId e2 : perm) v.detail += " " + std::to_string(e2);
                return v;
            }
            all_ok = all_ok && forall_b;
            ++idx;
        }
        if (all_ok) consistent.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Word> generated =
        enumerate_language(mps_from_ercs(es), limit).permutations();
    if (consistent != generated) {
        SemanticsVerdict v;
        v.ok = false;
        v.detail = "constraint-consistent permutations (" +
                   std::to_string(consistent.size()) +
                   ") differ from the generated language's full words (" +
                   std::to_string(generated.size()) + ")";
        return v;
    }
    return {};
}

}  // namespace antsort
