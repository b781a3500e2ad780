#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/errors.hpp"

namespace antsort {

// Three permutation families that sit just outside the reach of the
// availability-driven sorter: each one drops a property the sorter leans
// on, and each one makes the heap pay far more than the entropy of the
// family. None of them is offered as a candidate structure.

// --- rotated blocks -------------------------------------------------------

// Permutations of 0..n-1 built by cutting the ascending word into
// contiguous blocks and rotating each block one step (last element to the
// front). One permutation per subset of the n-1 cut positions.
std::uint64_t rotation_count(int n);   // 2^(n-1)
LanguageSet enumerate_rotation(int n);

struct RotationAxiomReport {
    AxiomVerdict greedoid;
    AxiomVerdict antimatroid;  // fails from n = 3 on, with witnesses
};

// Prefix-closes the family and runs both axiom checks over it.
RotationAxiomReport check_rotation_is_greedoid_not_antimatroid(int n);

// --- non-monotone tables --------------------------------------------------

// Same layout as ExplicitMps, but availability may be revoked by choosing
// more elements. No construction-time monotonicity check, hence none of
// the sorter machinery accepts this type.
class ExplicitNmps {
public:
    ExplicitNmps() = default;
    ExplicitNmps(int n, std::vector<std::vector<std::uint8_t>> tables);

    static ExplicitNmps from_predicate(
        int n, const std::function<bool(ElementId, Mask)>& pred);

    int size() const { return n_; }
    bool eval(ElementId x, Mask chosen_mask) const;

private:
    int n_ = 0;
    std::vector<std::vector<std::uint8_t>> tables_;
};

LanguageSet enumerate_nmps_language(const ExplicitNmps& s,
                                    int limit = kBruteForceLimit);

// Tables that permit x after exactly the chosen-sets realized by words of
// the language that continue with x. For a language satisfying the
// length-exchange axiom the round trip through enumerate_nmps_language
// returns the input; other languages may grow (the construction closes
// them under "some word with this support reached x").
ExplicitNmps nmps_from_greedoid(const LanguageSet& lang);

// --- one element moved to the front ---------------------------------------

// The n permutations that pull a single element of 0..n-1 to position 0
// and keep everything else ascending. Generated by non-monotone tables;
// carries log2(n) bits yet costs n-1 comparisons against an adversary.
LanguageSet single_move_permutations(int n);
ExplicitNmps single_move_nmps(int n);

// Answers order queries consistently with the fully ascending permutation
// and tracks which front-moved candidates each answer rules out. No single
// answer can rule out more than one.
class SingleMoveAdversary {
public:
    explicit SingleMoveAdversary(int n);

    // true iff a comes before b under the ascending order
    bool answer(ElementId a, ElementId b);

    int candidates_left() const { return left_; }
    bool candidate_alive(int m) const { return alive_.at(m) != 0; }
    int last_killed() const { return last_killed_; }  // 0 or 1
    std::uint64_t queries() const { return queries_; }

private:
    int n_ = 0;
    std::vector<std::uint8_t> alive_;
    int left_ = 0;
    int last_killed_ = 0;
    std::uint64_t queries_ = 0;
};

struct AdversaryRun {
    std::uint64_t comparisons = 0;
    int survivors = 0;
    int max_killed_by_one_query = 0;
};

// Plays the strongest question sequence against the adversary until one
// candidate remains; comes back with comparisons = n - 1 every time.
AdversaryRun run_single_move_adversary(int n);

// --- one shuffled block ---------------------------------------------------

// n = k*k elements, id = block*k + slot. Words take the blocks in order;
// exactly one block may come out in arbitrary slot order, the others are
// forced ascending. Availability depends on the order chosen so far, not
// just the set, so this family has no candidate structure at all.
std::uint64_t block_descriptor_count(int k);  // k * k!, one per (block, shuffle)
std::uint64_t block_distinct_count(int k);    // k * k! - (k - 1)
LanguageSet enumerate_block(int k);           // distinct words, k <= 4

// Order-sensitive availability over the shuffled-block family. Tracks the
// word chosen so far; copyable, so exhaustive enumeration can branch on
// snapshots. Once some completed block came out non-ascending, every later
// block releases one element at a time.
class BlockEngine {
public:
    explicit BlockEngine(int k);

    int size() const { return n_; }
    bool done() const { return taken_total_ == n_; }

    std::vector<ElementId> reset();  // forgets history, reports the first block
    std::vector<ElementId> step(ElementId x);
    std::vector<ElementId> available() const;

private:
    int k_ = 0, n_ = 0;
    std::vector<std::uint8_t> chosen_;
    int block_ = 0, taken_in_block_ = 0, taken_total_ = 0;
    bool current_ascending_ = true;
    bool spent_shuffle_ = false;  // a completed block was non-ascending
};

// --- how far the heap overshoots ------------------------------------------

struct SuboptimalityRow {
    std::string family;
    int n = 0;
    double itb_bits = 0;
    double comparisons = 0;  // averaged over arrival shuffles where random
    double ratio = 0;        // comparisons / itb_bits
};

struct SuboptimalityReport {
    std::vector<SuboptimalityRow> rows;
};

// Measures the heap against each family's entropy. Rotated blocks are fed
// to the heap all at once (nothing can stage their arrivals); the shuffled
// block family is driven through BlockEngine; the front-move row reports
// the adversary's forced count. Seeds are fixed, so the table is stable.
SuboptimalityReport demonstrate_suboptimality();

// header line plus one "family,n,itb_bits,comparisons,ratio" row each
std::string format_suboptimality_csv(const SuboptimalityReport& rep);

}  // namespace antsort
