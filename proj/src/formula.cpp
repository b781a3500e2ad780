#include "antsort/formula.hpp"

#include <cassert>
#include <cstddef>

namespace antsort {
namespace {

bool is_const(const Token& t) {
    return t.kind == Tok::Const0 || t.kind == Tok::Const1;
}

bool is_op(const Token& t) { return t.kind == Tok::And || t.kind == Tok::Or; }

bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

struct Lexer {
    std::string_view text;
    std::size_t at = 0;

    void skip_space() {
        while (at < text.size() && (text[at] == ' ' || text[at] == '\t')) ++at;
    }
    bool done() {
        skip_space();
        return at >= text.size();
    }
    char peek() {
        skip_space();
        return text[at];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("formula: " + what + " at column " +
                         std::to_string(at + 1));
    }
};

// small AST used by the parser, the evaluator, and the simplifier
struct Node {
    Tok kind;           // Var, Const0, Const1, And, Or
    ElementId var = -1;
    int lhs = -1, rhs = -1;
};

struct Ast {
    std::vector<Node> nodes;
    int root = -1;

    int add(Node n) {
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }
};

int parse_expr(Lexer& lx, Ast& ast, const Alphabet& ab, ElementId owner) {
    if (lx.done()) lx.fail("expected expression, found end of input");
    char c = lx.peek();
    if (c == '(') {
        ++lx.at;
        int lhs = parse_expr(lx, ast, ab, owner);
        if (lx.done()) lx.fail("unclosed '('");
        char d = lx.peek();
        if (d == ')') {  // redundant wrapping, legal
            ++lx.at;
            return lhs;
        }
        if (d != '&' && d != '|')
            lx.fail(std::string("expected '&', '|' or ')', found '") + d + "'");
        ++lx.at;
        int rhs = parse_expr(lx, ast, ab, owner);
        if (lx.done() || lx.peek() != ')')
            lx.fail("expected ')' (each operator needs its own parentheses)");
        ++lx.at;
        return ast.add({d == '&' ? Tok::And : Tok::Or, -1, lhs, rhs});
    }
    if (is_name_char(c)) {
        std::size_t start = lx.at;
        while (lx.at < lx.text.size() && is_name_char(lx.text[lx.at])) ++lx.at;
        std::string_view name = lx.text.substr(start, lx.at - start);
        if (name == "0") return ast.add({Tok::Const0});
        if (name == "1") return ast.add({Tok::Const1});
        auto id = ab.find(name);
        if (!id) lx.fail("unknown element '" + std::string(name) + "'");
        if (*id == owner)
            lx.fail("formula for '" + ab.name(owner) + "' refers to itself");
        return ast.add({Tok::Var, *id});
    }
    lx.fail(std::string("unexpected character '") + c + "'");
}

// tokens -> AST, trusting nothing about the stream
int build_ast(const std::vector<Token>& toks, std::size_t& at, Ast& ast) {
    if (at >= toks.size()) throw InputError("formula: truncated token stream");
    Token t = toks[at++];
    switch (t.kind) {
        case Tok::Var:
        case Tok::Const0:
        case Tok::Const1:
            return ast.add({t.kind, t.var});
        case Tok::LParen: {
            int lhs = build_ast(toks, at, ast);
            if (at >= toks.size())
                throw InputError("formula: truncated token stream");
            if (toks[at].kind == Tok::RParen) {
                ++at;
                return lhs;
            }
            if (!is_op(toks[at]))
                throw InputError("formula: operator expected inside group");
            Tok op = toks[at++].kind;
            int rhs = build_ast(toks, at, ast);
            if (at >= toks.size() || toks[at].kind != Tok::RParen)
                throw InputError("formula: unbalanced parentheses");
            ++at;
            return ast.add({op, -1, lhs, rhs});
        }
        default:
            throw InputError("formula: misplaced token");
    }
}

Ast ast_of(const Formula& f) {
    Ast ast;
    std::size_t at = 0;
    ast.root = build_ast(f.tokens, at, ast);
    if (at != f.tokens.size())
        throw InputError("formula: trailing tokens after expression");
    return ast;
}

bool eval_node(const Ast& ast, int i, Mask chosen) {
    const Node& n = ast.nodes[i];
    switch (n.kind) {
        case Tok::Var:
            return (chosen >> n.var) & 1u;
        case Tok::Const0:
            return false;
        case Tok::Const1:
            return true;
        case Tok::And:
            return eval_node(ast, n.lhs, chosen) && eval_node(ast, n.rhs, chosen);
        default:
            return eval_node(ast, n.lhs, chosen) || eval_node(ast, n.rhs, chosen);
    }
}

// constant folding; -1 for "whole subtree is const0", -2 for const1
int fold(Ast& ast, int i) {
    Node& n = ast.nodes[i];
    if (n.kind == Tok::Const0) return -1;
    if (n.kind == Tok::Const1) return -2;
    if (n.kind == Tok::Var) return i;
    int l = fold(ast, n.lhs);
    int r = fold(ast, n.rhs);
    bool conj = ast.nodes[i].kind == Tok::And;
    if (l == (conj ? -1 : -2)) return l;             // 0&x, 1|x
    if (r == (conj ? -1 : -2)) return r;             // x&0, x|1
    if (l < 0) return r;                             // 1&x, 0|x
    if (r < 0) return l;                             // x&1, x|0
    ast.nodes[i].lhs = l;
    ast.nodes[i].rhs = r;
    return i;
}

void emit(const Ast& ast, int i, std::vector<Token>& out) {
    const Node& n = ast.nodes[i];
    if (n.kind == Tok::Var || n.kind == Tok::Const0 || n.kind == Tok::Const1) {
        out.push_back({n.kind, n.var});
        return;
    }
    out.push_back({Tok::LParen});
    emit(ast, n.lhs, out);
    out.push_back({n.kind});
    emit(ast, n.rhs, out);
    out.push_back({Tok::RParen});
}

}  // namespace

Formula parse_formula(std::string_view text, const Alphabet& ab,
                      ElementId owner) {
    // parse to an AST for validation, then keep the literal token stream
    Lexer lx{text};
    Ast ast;
    ast.root = parse_expr(lx, ast, ab, owner);
    if (!lx.done())
        lx.fail("trailing input (each operator needs its own parentheses)");

    Formula f;
    f.owner = owner;
    Lexer again{text};
    while (!again.done()) {
        char c = again.peek();
        if (c == '(') {
            f.tokens.push_back({Tok::LParen});
            ++again.at;
        } else if (c == ')') {
            f.tokens.push_back({Tok::RParen});
            ++again.at;
        } else if (c == '&') {
            f.tokens.push_back({Tok::And});
            ++again.at;
        } else if (c == '|') {
            f.tokens.push_back({Tok::Or});
            ++again.at;
        } else {
            std::size_t start = again.at;
            while (again.at < text.size() && is_name_char(text[again.at]))
                ++again.at;
            std::string_view name = text.substr(start, again.at - start);
            if (name == "0")
                f.tokens.push_back({Tok::Const0});
            else if (name == "1")
                f.tokens.push_back({Tok::Const1});
            else
                f.tokens.push_back({Tok::Var, *ab.find(name)});
        }
    }
    return f;
}

std::string format_formula(const Formula& f, const Alphabet& ab) {
    std::string out;
    for (std::size_t i = 0; i < f.tokens.size(); ++i) {
        const Token& t = f.tokens[i];
        if (!out.empty() && out.back() != '(' && t.kind != Tok::RParen)
            out += ' ';
        switch (t.kind) {
            case Tok::Var: out += ab.name(t.var); break;
            case Tok::And: out += '&'; break;
            case Tok::Or: out += '|'; break;
            case Tok::Const0: out += '0'; break;
            case Tok::Const1: out += '1'; break;
            case Tok::LParen: out += '('; break;
            case Tok::RParen: out += ')'; break;
        }
    }
    return out;
}

bool eval_formula(const Formula& f, Mask chosen) {
    Ast ast = ast_of(f);
    return eval_node(ast, ast.root, chosen);
}

Formula simplify_formula(const Formula& f) {
    Ast ast = ast_of(f);
    int r = fold(ast, ast.root);
    Formula out;
    out.owner = f.owner;
    if (r == -1)
        out.tokens.push_back({Tok::Const0});
    else if (r == -2)
        out.tokens.push_back({Tok::Const1});
    else
        emit(ast, r, out.tokens);
    return out;
}

FormulaSystem::FormulaSystem(int n, std::vector<Formula> formulas) : n_(n) {
    if (static_cast<int>(formulas.size()) != n)
        throw InputError("formula system: expected " + std::to_string(n) +
                         " formulas, got " + std::to_string(formulas.size()));
    occ_.resize(n);
    for (ElementId x = 0; x < n; ++x) {
        const Formula& f = formulas[x];
        if (f.owner != x)
            throw InputError("formula system: formula " + std::to_string(x) +
                             " owned by " + std::to_string(f.owner));
        for (const Token& t : f.tokens)
            if (t.kind == Tok::Var && (t.var < 0 || t.var >= n || t.var == x))
                throw InputError("formula system: variable out of range in "
                                 "formula " + std::to_string(x));
        Formula s = simplify_formula(f);  // also validates the token stream
        token_count_ += s.tokens.size();
        for (int i = 0; i < static_cast<int>(s.tokens.size()); ++i)
            if (s.tokens[i].kind == Tok::Var)
                occ_[s.tokens[i].var].push_back({x, i});
        simplified_.push_back(std::move(s));
    }
    raw_ = std::move(formulas);
}

FormulaCds::FormulaCds(const FormulaSystem& fs) : fs_(&fs), n_(fs.size()) {
    begin_.resize(n_);
    end_.resize(n_);
    for (ElementId x = 0; x < n_; ++x) {
        begin_[x] = static_cast<int>(pristine_.size());
        const auto& toks = fs.simplified(x).tokens;
        pristine_.insert(pristine_.end(), toks.begin(), toks.end());
        end_[x] = static_cast<int>(pristine_.size());
    }
    int total = static_cast<int>(pristine_.size());
    pristine_prev_.resize(total);
    pristine_next_.resize(total);
    match_.assign(total, -1);
    std::vector<int> stack;
    for (ElementId x = 0; x < n_; ++x) {
        for (int p = begin_[x]; p < end_[x]; ++p) {
            pristine_prev_[p] = (p == begin_[x]) ? -1 : p - 1;
            pristine_next_[p] = (p == end_[x] - 1) ? -1 : p + 1;
            if (pristine_[p].kind == Tok::LParen) stack.push_back(p);
            if (pristine_[p].kind == Tok::RParen) {
                assert(!stack.empty());
                match_[stack.back()] = p;
                match_[p] = stack.back();
                stack.pop_back();
            }
        }
        assert(stack.empty());
    }
    occ_.resize(n_);
    for (ElementId x = 0; x < n_; ++x)
        for (const auto& o : fs.occurrences(x))
            occ_[x].push_back({o.host, begin_[o.host] + o.pos});
}

std::vector<ElementId> FormulaCds::init() {
    started_ = true;
    work_ = 0;
    tokens_ = pristine_;
    prev_ = pristine_prev_;
    next_ = pristine_next_;
    alive_.assign(tokens_.size(), 1);
    decided_.assign(n_, 0);
    value_.assign(n_, 0);
    std::vector<ElementId> out;
    for (ElementId x = 0; x < n_; ++x) {
        if (end_[x] - begin_[x] != 1) continue;
        const Token& t = pristine_[begin_[x]];
        if (is_const(t)) {
            decided_[x] = 1;
            value_[x] = (t.kind == Tok::Const1);
            if (value_[x]) out.push_back(x);
        }
    }
    return out;
}

void FormulaCds::retire(int p) {
    alive_[p] = 0;
    ++work_;
}

void FormulaCds::stitch(int a, int b) {
    if (a != -1) next_[a] = b;
    if (b != -1) prev_[b] = a;
}

// Rewrite outward from the constant at p until no rule applies. Each pass
// through the loop either returns or retires at least two tokens, and a
// retired token is never looked at again.
void FormulaCds::reduce_from(ElementId y, int p, std::vector<ElementId>& out) {
    for (;;) {
        const Token t = tokens_[p];
        int l = prev_[p], r = next_[p];
        if (t.kind == Tok::Var) {
            // a shell around a lone variable can only come from the input
            if (l != -1 && tokens_[l].kind == Tok::LParen && r != -1 &&
                tokens_[r].kind == Tok::RParen) {
                stitch(prev_[l], p);
                stitch(p, next_[r]);
                retire(l);
                retire(r);
                continue;
            }
            return;
        }
        assert(is_const(t));
        bool one = (t.kind == Tok::Const1);
        if (l == -1 && r == -1) {  // the formula is this constant
            decided_[y] = 1;
            value_[y] = one;
            if (one) out.push_back(y);
            return;
        }
        if (l != -1 && tokens_[l].kind == Tok::LParen && r != -1 &&
            tokens_[r].kind == Tok::RParen) {  // ( c )
            stitch(prev_[l], p);
            stitch(p, next_[r]);
            retire(l);
            retire(r);
            continue;
        }
        if (r != -1 && is_op(tokens_[r])) {
            // left operand: the group reads ( c op X )
            int pl = l, pr = match_[pl];
            assert(pl != -1 && tokens_[pl].kind == Tok::LParen);
            if ((tokens_[r].kind == Tok::Or) == one) {
                // the constant absorbs X: delete op and X, keep ( c )
                int q = r;
                while (q != pr) {
                    int nq = next_[q];
                    retire(q);
                    q = nq;
                }
                stitch(p, pr);
                continue;
            }
            // the constant is the identity: the group becomes X bare
            int first = next_[r], last = prev_[pr];
            stitch(prev_[pl], first);
            stitch(last, next_[pr]);
            retire(pl);
            retire(p);
            retire(r);
            retire(pr);
            if (first == last && is_const(tokens_[first])) {
                p = first;
                continue;
            }
            return;
        }
        if (l != -1 && is_op(tokens_[l])) {
            // right operand: the group reads ( X op c )
            int pr = r, pl = match_[pr];
            assert(pr != -1 && tokens_[pr].kind == Tok::RParen);
            if ((tokens_[l].kind == Tok::Or) == one) {
                int q = next_[pl];
                while (q != p) {
                    int nq = next_[q];
                    retire(q);
                    q = nq;
                }
                stitch(pl, p);
                continue;
            }
            int first = next_[pl], last = prev_[l];
            stitch(prev_[pl], first);
            stitch(last, next_[pr]);
            retire(pl);
            retire(l);
            retire(p);
            retire(pr);
            if (first == last && is_const(tokens_[first])) {
                p = first;
                continue;
            }
            return;
        }
        assert(false && "constant with an unreducible neighborhood");
        return;
    }
}

std::vector<ElementId> FormulaCds::step(ElementId x) {
    if (!started_) throw UsageError("formula cds: step before init");
    if (x < 0 || x >= n_) throw UsageError("formula cds: element out of range");
    std::vector<ElementId> out;
    for (const Occ& o : occ_[x]) {
        ++work_;
        if (decided_[o.host] || !alive_[o.pos]) continue;
        assert(tokens_[o.pos].kind == Tok::Var && tokens_[o.pos].var == x);
        tokens_[o.pos] = {Tok::Const1};
        reduce_from(o.host, o.pos, out);
    }
    return out;
}

FormulaSystem formulas_from_mps(const ExplicitMps& s) {
    int n = s.size();
    std::vector<Formula> formulas;
    for (ElementId x = 0; x < n; ++x) {
        Formula f;
        f.owner = x;
        std::vector<Mask> minimal;
        Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
        for (Mask m = 0; m <= full; ++m) {
            if (m & (Mask{1} << x)) continue;
            if (!s.eval(x, m)) continue;
            bool is_minimal = true;
            for (int b = 0; b < n && is_minimal; ++b)
                if ((m >> b) & 1u)
                    if (s.eval(x, m & ~(Mask{1} << b))) is_minimal = false;
            if (is_minimal) minimal.push_back(m);
        }
        auto term = [&](Mask m) {
            std::vector<Token> t;
            for (int b = 0; b < n; ++b) {
                if (!((m >> b) & 1u)) continue;
                if (t.empty()) {
                    t.push_back({Tok::Var, b});
                } else {
                    t.insert(t.begin(), {Tok::LParen});
                    t.push_back({Tok::And});
                    t.push_back({Tok::Var, b});
                    t.push_back({Tok::RParen});
                }
            }
            return t;
        };
        if (minimal.empty()) {
            f.tokens.push_back({Tok::Const0});
        } else if (minimal.front() == 0) {
            // the empty set suffices, so every other set does too
            f.tokens.push_back({Tok::Const1});
        } else {
            for (Mask m : minimal) {
                std::vector<Token> t = term(m);
                if (f.tokens.empty()) {
                    f.tokens = std::move(t);
                } else {
                    f.tokens.insert(f.tokens.begin(), {Tok::LParen});
                    f.tokens.push_back({Tok::Or});
                    f.tokens.insert(f.tokens.end(), t.begin(), t.end());
                    f.tokens.push_back({Tok::RParen});
                }
            }
        }
        formulas.push_back(std::move(f));
    }
    return FormulaSystem(n, std::move(formulas));
}

ExplicitMps mps_from_formulas(const FormulaSystem& fs) {
    return ExplicitMps::from_predicate(fs.size(), [&](ElementId x, Mask m) {
        return eval_formula(fs.raw(x), m);
    });
}

}  // namespace antsort
