#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antsort/errors.hpp"

namespace antsort {

// Elements are dense ids 0..n-1. Words are id sequences without repeats.
using ElementId = int;
using Word = std::vector<ElementId>;
using Mask = std::uint32_t;  // subset of the alphabet, bit i = element i

// Brute-force enumeration refuses to run past this unless the caller
// explicitly raises the limit.
inline constexpr int kBruteForceLimit = 10;

// Hard cap for explicit availability tables (2^(n-1) entries per element).
inline constexpr int kExplicitTableLimit = 16;

bool is_simple(const Word& w);
Mask support_mask(const Word& w);

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // "a", "b", ..., "z", "x26", "x27", ... for quick test setup
    static Alphabet letters(int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(ElementId x) const { return names_.at(x); }
    std::optional<ElementId> find(std::string_view name) const;

    // "bca" when every name is a single char, "b c a" otherwise
    std::string format_word(const Word& w) const;

private:
    std::vector<std::string> names_;
};

// Answers order queries against a hidden permutation and counts every query.
// All modules share one meter: whoever holds the oracle pays for comparisons.
class ComparisonOracle {
public:
    explicit ComparisonOracle(Word hidden_order);

    int size() const { return static_cast<int>(position_.size()); }
    bool less(ElementId a, ElementId b) const;
    std::uint64_t comparisons() const { return count_; }

    // rank of x in the hidden order (not a comparison; for harness use only)
    int rank(ElementId x) const { return position_.at(x); }
    const Word& hidden_order() const { return order_; }

    void enable_log() { logging_ = true; }
    struct Query {
        ElementId a, b;
        bool answer;
    };
    const std::vector<Query>& log() const { return log_; }
    // re-asks every logged query and checks the answer is unchanged
    bool replay_log_consistent() const;

private:
    Word order_;
    std::vector<int> position_;
    mutable std::uint64_t count_ = 0;
    bool logging_ = false;
    mutable std::vector<Query> log_;
};

// One availability table per element: p_x maps subsets of the other n-1
// elements to 0/1. Tables are validated monotone at construction, so every
// instance held by this type is a genuine antimatroid description.
class ExplicitMps {
public:
    ExplicitMps() = default;
    ExplicitMps(int n, std::vector<std::vector<std::uint8_t>> tables);

    // pred(x, chosen_mask) with bit x of chosen_mask always clear
    static ExplicitMps from_predicate(
        int n, const std::function<bool(ElementId, Mask)>& pred);

    int size() const { return n_; }

    // chosen_mask is over the full alphabet; bit x must be clear
    bool eval(ElementId x, Mask chosen_mask) const;

private:
    int n_ = 0;
    // tables_[x] has 2^(n-1) entries indexed by the squeezed mask
    std::vector<std::vector<std::uint8_t>> tables_;

    static std::size_t squeeze(ElementId x, Mask chosen_mask);
    void check_monotone() const;
};

// eval with the precondition (x not chosen) enforced loudly
bool evaluate_mps(const ExplicitMps& s, ElementId x, Mask chosen_mask);

// A finite set of simple words, stored sorted. Doubles as "set of
// permutations" for families that are not prefix-closed.
class LanguageSet {
public:
    LanguageSet() = default;
    LanguageSet(int n, std::vector<Word> words);

    int alphabet_size() const { return n_; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(const Word& w) const;
    bool empty() const { return words_.empty(); }

    // words using every element, in sorted order
    std::vector<Word> permutations() const;
    std::size_t permutation_count() const;

    // every proper prefix of every word, added in
    LanguageSet prefix_closure() const;

private:
    int n_ = 0;
    std::vector<Word> words_;  // sorted, unique
};

// All words generated by S, by depth-first extension. The result is
// prefix-closed and sorted. Throws LimitError when S.size() > limit.
LanguageSet enumerate_language(const ExplicitMps& s, int limit = kBruteForceLimit);

struct AxiomVerdict {
    bool ok = true;
    std::string reason;       // empty when ok
    Word alpha, beta;         // witnesses; see reason for their roles
    explicit operator bool() const { return ok; }
};

// (i) prefix closure, (ii) the exchange axiom on support inclusion.
// Witnesses are the first violating words in sorted order.
AxiomVerdict check_antimatroid_axioms(const LanguageSet& lang);

// same, with the exchange axiom keyed on word length instead of support
AxiomVerdict check_greedoid_axioms(const LanguageSet& lang);

// Rebuilds availability tables from a language: p_x(X) = 1 iff some word
// alpha x in L has support(alpha) within X. Caller guarantees the language
// passed check_antimatroid_axioms; the round trip through
// enumerate_language then gives back exactly L.
ExplicitMps mps_from_language(const LanguageSet& lang);

// log2 of the number of full-length words; the information-theoretic floor
// (in bits) for sorting under this constraint
double itb_bits(const LanguageSet& lang);

}  // namespace antsort
