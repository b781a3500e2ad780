#include "antsort/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace antsort {

bool is_simple(const Word& w) {
    Mask seen = 0;
    for (ElementId x : w) {
        if (x < 0 || x >= 32) return false;
        if (seen & (Mask{1} << x)) return false;
        seen |= Mask{1} << x;
    }
    return true;
}

Mask support_mask(const Word& w) {
    Mask m = 0;
    for (ElementId x : w) m |= Mask{1} << x;
    return m;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw InputError("alphabet: empty element name");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i])
                throw InputError("alphabet: duplicate element name '" + names_[i] + "'");
    }
}

Alphabet Alphabet::letters(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i < 26)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("x" + std::to_string(i));
    }
    return Alphabet(std::move(names));
}

std::optional<ElementId> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<ElementId>(i);
    return std::nullopt;
}

std::string Alphabet::format_word(const Word& w) const {
    bool compact = true;
    for (const auto& n : names_)
        if (n.size() != 1) compact = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += name(w[i]);
    }
    return out;
}

ComparisonOracle::ComparisonOracle(Word hidden_order) : order_(std::move(hidden_order)) {
    int n = static_cast<int>(order_.size());
    position_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        ElementId x = order_[i];
        if (x < 0 || x >= n || position_[x] != -1)
            throw InputError("oracle: hidden order is not a permutation");
        position_[x] = i;
    }
}

bool ComparisonOracle::less(ElementId a, ElementId b) const {
    if (a == b) throw UsageError("oracle: element compared with itself");
    if (a < 0 || b < 0 || a >= size() || b >= size())
        throw UsageError("oracle: element out of range");
    ++count_;
    bool ans = position_[a] < position_[b];
    if (logging_) log_.push_back({a, b, ans});
    return ans;
}

bool ComparisonOracle::replay_log_consistent() const {
    for (const Query& q : log_)
        if ((position_[q.a] < position_[q.b]) != q.answer) return false;
    return true;
}

std::size_t ExplicitMps::squeeze(ElementId x, Mask chosen_mask) {
    // drop bit x, close the gap
    Mask low = chosen_mask & ((Mask{1} << x) - 1);
    Mask high = chosen_mask >> (x + 1);
    return low | (high << x);
}

ExplicitMps::ExplicitMps(int n, std::vector<std::vector<std::uint8_t>> tables)
    : n_(n), tables_(std::move(tables)) {
    if (n < 0 || n > kExplicitTableLimit)
        throw LimitError("explicit tables support at most " +
                         std::to_string(kExplicitTableLimit) + " elements, got " +
                         std::to_string(n));
    if (static_cast<int>(tables_.size()) != n)
        throw InputError("explicit tables: need one table per element");
    std::size_t want = n == 0 ? 0 : (std::size_t{1} << (n - 1));
    for (const auto& t : tables_)
        if (t.size() != want)
            throw InputError("explicit tables: table has wrong size");
    check_monotone();
}

ExplicitMps ExplicitMps::from_predicate(
    int n, const std::function<bool(ElementId, Mask)>& pred) {
    if (n < 0 || n > kExplicitTableLimit)
        throw LimitError("explicit tables support at most " +
                         std::to_string(kExplicitTableLimit) + " elements, got " +
                         std::to_string(n));
    std::vector<std::vector<std::uint8_t>> tables(n);
    for (ElementId x = 0; x < n; ++x) {
        tables[x].assign(n == 0 ? 0 : (std::size_t{1} << (n - 1)), 0);
        // walk full-alphabet masks with bit x clear; their squeezed images
        // cover every table index exactly once
        for (Mask m = 0; m < (Mask{1} << n); ++m) {
            if (m & (Mask{1} << x)) continue;
            tables[x][squeeze(x, m)] = pred(x, m) ? 1 : 0;
        }
    }
    return ExplicitMps(n, std::move(tables));
}

bool ExplicitMps::eval(ElementId x, Mask chosen_mask) const {
    assert(x >= 0 && x < n_);
    assert((chosen_mask & (Mask{1} << x)) == 0);
    assert((chosen_mask >> n_) == 0);
    return tables_[x][squeeze(x, chosen_mask)] != 0;
}

void ExplicitMps::check_monotone() const {
    for (ElementId x = 0; x < n_; ++x) {
        // p_x(X) = 1 must survive adding any element to X
        for (Mask m = 0; m < (Mask{1} << n_); ++m) {
            if (m & (Mask{1} << x)) continue;
            if (!eval(x, m)) continue;
            for (ElementId y = 0; y < n_; ++y) {
                if (y == x || (m & (Mask{1} << y))) continue;
                if (!eval(x, m | (Mask{1} << y)))
                    throw InputError(
                        "availability table for element " + std::to_string(x) +
                        " is not monotone (loses availability when element " +
                        std::to_string(y) + " is added)");
            }
        }
    }
}

bool evaluate_mps(const ExplicitMps& s, ElementId x, Mask chosen_mask) {
    if (x < 0 || x >= s.size())
        throw UsageError("evaluate_mps: element out of range");
    if (chosen_mask & (Mask{1} << x))
        throw UsageError("evaluate_mps: element is already in the chosen set");
    if (s.size() < 32 && (chosen_mask >> s.size()) != 0)
        throw UsageError("evaluate_mps: chosen set mentions unknown elements");
    return s.eval(x, chosen_mask);
}

LanguageSet::LanguageSet(int n, std::vector<Word> words)
    : n_(n), words_(std::move(words)) {
    for (const Word& w : words_) {
        if (!is_simple(w))
            throw InputError("language: word repeats an element");
        for (ElementId x : w)
            if (x < 0 || x >= n)
                throw InputError("language: word mentions element outside the alphabet");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool LanguageSet::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<Word> LanguageSet::permutations() const {
    std::vector<Word> out;
    for (const Word& w : words_)
        if (static_cast<int>(w.size()) == n_) out.push_back(w);
    return out;
}

std::size_t LanguageSet::permutation_count() const {
    std::size_t c = 0;
    for (const Word& w : words_)
        if (static_cast<int>(w.size()) == n_) ++c;
    return c;
}

LanguageSet LanguageSet::prefix_closure() const {
    std::vector<Word> all = words_;
    for (const Word& w : words_)
        for (std::size_t len = 0; len < w.size(); ++len)
            all.emplace_back(w.begin(), w.begin() + len);
    return LanguageSet(n_, std::move(all));
}

LanguageSet enumerate_language(const ExplicitMps& s, int limit) {
    int n = s.size();
    if (n > limit)
        throw LimitError("enumerate_language: " + std::to_string(n) +
                         " elements exceeds the brute-force limit of " +
                         std::to_string(limit));
    std::vector<Word> words;
    Word cur;
    // extending in ascending element order makes the output sorted already
    auto dfs = [&](auto&& self, Mask chosen) -> void {
        words.push_back(cur);
        for (ElementId x = 0; x < n; ++x) {
            if (chosen & (Mask{1} << x)) continue;
            if (!s.eval(x, chosen)) continue;
            cur.push_back(x);
            self(self, chosen | (Mask{1} << x));
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return LanguageSet(n, std::move(words));
}

namespace {

AxiomVerdict check_axioms(const LanguageSet& lang, bool antimatroid) {
    AxiomVerdict v;
    if (lang.empty()) {
        v.ok = false;
        v.reason = "language is empty";
        return v;
    }
    const auto& words = lang.words();
    // (i) prefix closure; words are sorted, so the first failure is minimal
    for (const Word& w : words) {
        if (w.empty()) continue;
        Word parent(w.begin(), w.end() - 1);
        if (!lang.contains(parent)) {
            v.ok = false;
            v.reason = "not prefix-closed";
            v.alpha = w;  // the word whose parent is missing
            return v;
        }
    }
    // (ii) exchange: alpha must lend a next letter to beta
    for (const Word& a : words) {
        Mask sa = support_mask(a);
        for (const Word& b : words) {
            Mask sb = support_mask(b);
            bool applies = antimatroid ? (sa & ~sb) != 0 : a.size() > b.size();
            if (!applies) continue;
            bool found = false;
            for (ElementId x : a) {
                if (sb & (Mask{1} << x)) continue;
                Word bx = b;
                bx.push_back(x);
                if (lang.contains(bx)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                v.ok = false;
                v.reason = antimatroid
                               ? "exchange fails: no letter of alpha extends beta"
                               : "exchange fails: longer alpha lends no letter to beta";
                v.alpha = a;
                v.beta = b;
                return v;
            }
        }
    }
    return v;
}

}  // namespace

AxiomVerdict check_antimatroid_axioms(const LanguageSet& lang) {
    return check_axioms(lang, true);
}

AxiomVerdict check_greedoid_axioms(const LanguageSet& lang) {
    return check_axioms(lang, false);
}

ExplicitMps mps_from_language(const LanguageSet& lang) {
    int n = lang.alphabet_size();
    if (n > kExplicitTableLimit)
        throw LimitError("mps_from_language: alphabet too large for explicit tables");
    if (lang.empty())
        throw InputError("mps_from_language: empty language");
    std::size_t half = n == 0 ? 0 : (std::size_t{1} << (n - 1));
    std::vector<std::vector<std::uint8_t>> tables(n);
    for (auto& t : tables) t.assign(half, 0);
    // seed each table with the supports seen before x, then close upward
    auto squeeze = [](ElementId x, Mask m) -> std::size_t {
        Mask low = m & ((Mask{1} << x) - 1);
        Mask high = m >> (x + 1);
        return low | (high << x);
    };
    for (const Word& w : lang.words()) {
        if (w.empty()) continue;
        ElementId x = w.back();
        Mask pre = support_mask(w) & ~(Mask{1} << x);
        tables[x][squeeze(x, pre)] = 1;
    }
    for (ElementId x = 0; x < n; ++x) {
        for (std::size_t idx = 0; idx < half; ++idx) {
            if (!tables[x][idx]) continue;
            for (int b = 0; b + 1 < n; ++b)
                tables[x][idx | (std::size_t{1} << b)] = 1;
        }
    }
    return ExplicitMps(n, std::move(tables));
}

double itb_bits(const LanguageSet& lang) {
    std::size_t c = lang.permutation_count();
    if (c == 0)
        throw InputError("itb_bits: language has no full-length word");
    return std::log2(static_cast<double>(c));
}

}  // namespace antsort
