#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// One release constraint: nothing in b may be taken until something in a
// has been. Stored sorted and duplicate-free with a and b disjoint.
struct Erc {
    std::vector<ElementId> a, b;
};

class ErcSet {
public:
    ErcSet() = default;
    ErcSet(int n, std::vector<Erc> ercs);

    int alphabet_size() const { return n_; }
    const std::vector<Erc>& ercs() const { return ercs_; }

    // constraints whose b side was empty; they bind nothing and are not kept
    int dropped_vacuous() const { return dropped_; }

    // total stored side lengths; the linear-work budget
    std::uint64_t input_size() const;

private:
    int n_ = 0;
    std::vector<Erc> ercs_;
    int dropped_ = 0;
};

// Counter-driven availability: blockers(x) counts the constraints still
// holding x back; the first chosen a-member of a constraint retires it for
// good. Each constraint side is walked at most once per epoch.
class ErcCds : public Cds {
public:
    explicit ErcCds(const ErcSet& es);

    int universe_size() const override { return n_; }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;
    std::uint64_t work() const override { return work_; }

private:
    int n_ = 0;
    bool started_ = false;
    std::vector<std::vector<ElementId>> bs_;   // constraint -> b side
    std::vector<std::vector<int>> in_a_;       // element -> constraints
    std::vector<int> base_blockers_;
    std::vector<int> blockers_;
    std::vector<std::uint8_t> retired_;
    std::uint64_t work_ = 0;
};

// Tables computed straight from the definition (x is available when every
// constraint naming it on the b side has been hit), independent of the
// counter machinery.
ExplicitMps mps_from_ercs(const ErcSet& es);

// Constraint set computing exactly the given tables: for each x and each
// maximal chosen-set leaving x unavailable, the complement must be hit.
// An element that stays unavailable even when everything else is chosen
// has no constraint form (its a side would be empty), so such tables are
// rejected through the ErcSet constructor.
ErcSet ercs_from_mps(const ExplicitMps& s);

struct SemanticsVerdict {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

// Brute-force check over all n! permutations: a permutation satisfies the
// constraint set iff it is a full word of the generated language, and the
// two readings of "satisfies (a, b)" — every b-member preceded by some
// a-member, some a-member preceding every b-member — agree everywhere.
SemanticsVerdict erc_semantics_check(const ErcSet& es,
                                     int limit = kBruteForceLimit);

}  // namespace antsort
