#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// Monotone guard formulas: one formula per element, over the other
// elements, with no negation anywhere in the grammar.
enum class Tok : std::uint8_t { Var, And, Or, Const0, Const1, LParen, RParen };

struct Token {
    Tok kind;
    ElementId var = -1;  // meaningful only when kind == Tok::Var
    bool operator==(const Token&) const = default;
};

struct Formula {
    ElementId owner = -1;
    std::vector<Token> tokens;
};

// Grammar: expr := name | "0" | "1" | "(" expr ")" | "(" expr op expr ")"
// with op in {"&", "|"}. Every binary operator carries its own parentheses;
// "(a & b | c)" is rejected rather than disambiguated. The formula may not
// mention its own owner.
Formula parse_formula(std::string_view text, const Alphabet& ab, ElementId owner);

std::string format_formula(const Formula& f, const Alphabet& ab);

// Truth value under the chosen set. Walks the raw tokens; shares no code
// with simplification, so the two can check each other.
bool eval_formula(const Formula& f, Mask chosen);

// Full constant elimination. The result is a single constant or a
// constant-free formula with no redundant parentheses, and computes the
// same function as the input.
Formula simplify_formula(const Formula& f);

// All guard formulas of an instance plus the occurrence index into their
// simplified forms. Every variable token of every simplified formula
// appears in the index exactly once.
class FormulaSystem {
public:
    struct Occurrence {
        ElementId host;  // the formula the variable sits in
        int pos;         // token position within that simplified formula
    };

    FormulaSystem() = default;
    FormulaSystem(int n, std::vector<Formula> formulas);

    int size() const { return n_; }
    const Formula& raw(ElementId x) const { return raw_.at(x); }
    const Formula& simplified(ElementId x) const { return simplified_.at(x); }
    const std::vector<Occurrence>& occurrences(ElementId x) const {
        return occ_.at(x);
    }

    // token total over the simplified formulas; the linear-work budget
    std::uint64_t token_count() const { return token_count_; }

private:
    int n_ = 0;
    std::vector<Formula> raw_, simplified_;
    std::vector<std::vector<Occurrence>> occ_;
    std::uint64_t token_count_ = 0;
};

// Incremental availability over guard formulas. step(x) writes const1 over
// each live occurrence of x and rewrites outward from that spot; every
// rewrite retires at least two tokens, so the total rewrite work over an
// epoch is bounded by the token count. work() counts retired tokens plus
// occurrence visits.
class FormulaCds : public Cds {
public:
    explicit FormulaCds(const FormulaSystem& fs);

    int universe_size() const override { return n_; }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;
    std::uint64_t work() const override { return work_; }

private:
    void retire(int p);
    void stitch(int a, int b);
    void reduce_from(ElementId y, int p, std::vector<ElementId>& out);

    const FormulaSystem* fs_ = nullptr;
    int n_ = 0;
    bool started_ = false;

    // one arena over all simplified formulas; links never cross formulas
    std::vector<Token> pristine_;
    std::vector<int> pristine_prev_, pristine_next_;
    std::vector<int> match_;            // paren partner, fixed for all epochs
    std::vector<int> begin_, end_;      // formula -> arena range

    struct Occ {
        ElementId host;
        int pos;  // arena-absolute
    };
    std::vector<std::vector<Occ>> occ_;

    // per-epoch state
    std::vector<Token> tokens_;
    std::vector<int> prev_, next_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint8_t> decided_, value_;
    std::uint64_t work_ = 0;
};

// Guard formulas computing exactly the given tables: disjunction over the
// minimal chosen-sets that make x available, each as a conjunction.
FormulaSystem formulas_from_mps(const ExplicitMps& s);

// Tables from raw formula truth values, for checking the rewriting path
// against something that never rewrites.
ExplicitMps mps_from_formulas(const FormulaSystem& fs);

}  // namespace antsort
