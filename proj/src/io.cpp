#include "antsort/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace antsort {

namespace {

std::string strip_comment(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line;
}

std::vector<std::string> tokens_of(std::string_view line) {
    std::vector<std::string> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

// skips blanks and comments; yields the stripped line and its 1-based number
struct Reader {
    std::istream& in;
    int lineno = 0;

    bool next(std::string& line, int& at) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            line = strip_comment(raw);
            if (!tokens_of(line).empty()) {
                at = lineno;
                return true;
            }
        }
        return false;
    }
};

bool valid_name(const std::string& s) {
    if (s == "0" || s == "1" || s == "root") return false;
    return s.find_first_of("#:()&|") == std::string::npos;
}

ElementId need_element(const Alphabet& ab, const std::string& name, int at) {
    auto id = ab.find(name);
    if (!id) throw ParseError("unknown element '" + name + "'", at);
    return *id;
}

std::string join_names(const Alphabet& ab, const std::vector<ElementId>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ' ';
        s += ab.name(ids[i]);
    }
    return s;
}

std::string format_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", w);
    return buf;
}

InstanceKind parse_kind(const std::vector<std::string>& toks, int at) {
    const std::string& head = toks[0];
    if (toks.size() == 1) {
        if (head == "formulas") return InstanceKind::formulas;
        if (head == "ercs") return InstanceKind::ercs;
        if (head == "digraph") return InstanceKind::digraph;
        if (head == "graph") return InstanceKind::graph;
        if (head == "chordal") return InstanceKind::chordal;
        if (head == "weighted-digraph") return InstanceKind::weighted_digraph;
    }
    if (toks.size() == 2 && head == "graph" && toks[1] == "chordal")
        return InstanceKind::chordal;
    std::string got;
    for (const auto& t : toks) got += (got.empty() ? "" : " ") + t;
    throw ParseError("unknown instance kind '" + got + "'", at);
}

double parse_weight(const std::string& tok, int at) {
    size_t used = 0;
    double w = 0;
    try {
        w = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("bad weight '" + tok + "'", at);
    }
    if (used != tok.size() || !std::isfinite(w) || w <= 0)
        throw ParseError("weight must be a positive finite decimal, got '" + tok + "'",
                         at);
    return w;
}

}  // namespace

const char* kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::formulas: return "formulas";
        case InstanceKind::ercs: return "ercs";
        case InstanceKind::digraph: return "digraph";
        case InstanceKind::graph: return "graph";
        case InstanceKind::chordal: return "chordal";
        case InstanceKind::weighted_digraph: return "weighted-digraph";
    }
    return "?";
}

Instance parse_instance(std::istream& in) {
    Reader rd{in};
    std::string line;
    int at = 0;

    if (!rd.next(line, at)) throw ParseError("empty instance: missing kind header", 1);
    Instance inst;
    inst.kind = parse_kind(tokens_of(line), at);

    if (!rd.next(line, at))
        throw ParseError("expected an alphabet line", rd.lineno + 1);
    std::vector<std::string> toks = tokens_of(line);
    if (toks[0] != "alphabet")
        throw ParseError("expected an alphabet line, got '" + toks[0] + "'", at);
    std::vector<std::string> names(toks.begin() + 1, toks.end());
    for (const auto& nm : names) {
        if (!valid_name(nm))
            throw ParseError("'" + nm + "' cannot name an element", at);
        if (std::count(names.begin(), names.end(), nm) > 1)
            throw ParseError("element '" + nm + "' declared twice", at);
    }
    inst.alphabet = Alphabet(names);
    const Alphabet& ab = inst.alphabet;
    const int n = ab.size();

    const bool needs_root = inst.kind == InstanceKind::digraph ||
                            inst.kind == InstanceKind::graph ||
                            inst.kind == InstanceKind::weighted_digraph;

    std::vector<Formula> formulas(n);
    std::vector<std::uint8_t> defined(n, 0);
    std::vector<Erc> ercs;

    while (rd.next(line, at)) {
        switch (inst.kind) {
            case InstanceKind::formulas: {
                auto colon = line.find(':');
                if (colon == std::string::npos)
                    throw ParseError("expected 'name: formula'", at);
                std::vector<std::string> left = tokens_of(line.substr(0, colon));
                if (left.size() != 1)
                    throw ParseError("expected one element name before ':'", at);
                ElementId x = need_element(ab, left[0], at);
                if (defined[x])
                    throw ParseError("element '" + left[0] + "' defined twice", at);
                try {
                    formulas[x] = parse_formula(line.substr(colon + 1), ab, x);
                } catch (const InputError& e) {
                    throw ParseError(e.what(), at);
                }
                defined[x] = 1;
                break;
            }
            case InstanceKind::ercs: {
                std::string spaced;
                for (char c : line) {
                    if (c == '|') spaced += " | ";
                    else spaced += c;
                }
                std::vector<std::string> parts = tokens_of(spaced);
                auto bar = std::find(parts.begin(), parts.end(), "|");
                if (bar == parts.end() ||
                    std::count(parts.begin(), parts.end(), "|") != 1)
                    throw ParseError("expected 'a b | c d' with one '|'", at);
                Erc erc;
                for (auto it = parts.begin(); it != bar; ++it)
                    erc.a.push_back(need_element(ab, *it, at));
                for (auto it = bar + 1; it != parts.end(); ++it)
                    erc.b.push_back(need_element(ab, *it, at));
                ercs.push_back(std::move(erc));
                break;
            }
            default: {
                std::vector<std::string> parts = tokens_of(line);
                if (parts[0] == "root") {
                    if (!needs_root)
                        throw ParseError("chordal instances have no root line", at);
                    if (parts.size() != 2)
                        throw ParseError("expected 'root r'", at);
                    if (inst.root >= 0) throw ParseError("root declared twice", at);
                    inst.root = need_element(ab, parts[1], at);
                    break;
                }
                size_t want = inst.kind == InstanceKind::weighted_digraph ? 3 : 2;
                if (parts.size() != want)
                    throw ParseError(
                        want == 3 ? "expected 'u v w'" : "expected 'u v'", at);
                int u = need_element(ab, parts[0], at);
                int v = need_element(ab, parts[1], at);
                inst.arcs.push_back({u, v});
                if (want == 3) inst.arc_weights.push_back(parse_weight(parts[2], at));
                break;
            }
        }
    }

    int eof = rd.lineno + 1;
    switch (inst.kind) {
        case InstanceKind::formulas:
            for (ElementId x = 0; x < n; ++x)
                if (!defined[x])
                    throw ParseError("no formula for element '" + ab.name(x) + "'",
                                     eof);
            inst.formulas = FormulaSystem(n, std::move(formulas));
            break;
        case InstanceKind::ercs:
            inst.ercs = ErcSet(n, std::move(ercs));
            break;
        case InstanceKind::digraph:
        case InstanceKind::graph:
            if (inst.root < 0) throw ParseError("missing root line", eof);
            inst.graph.emplace(n, inst.arcs, inst.root,
                               inst.kind == InstanceKind::digraph);
            break;
        case InstanceKind::chordal:
            inst.chordal.emplace(n, inst.arcs);
            break;
        case InstanceKind::weighted_digraph: {
            if (inst.root < 0) throw ParseError("missing root line", eof);
            std::vector<std::tuple<int, int, double>> warcs;
            for (size_t i = 0; i < inst.arcs.size(); ++i)
                warcs.push_back({inst.arcs[i].first, inst.arcs[i].second,
                                 inst.arc_weights[i]});
            inst.weighted.emplace(n, warcs, inst.root);
            break;
        }
    }
    return inst;
}

Instance parse_instance_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    return parse_instance(in);
}

std::string print_instance(const Instance& inst) {
    const Alphabet& ab = inst.alphabet;
    std::string out = kind_name(inst.kind);
    out += "\nalphabet";
    for (ElementId x = 0; x < ab.size(); ++x) out += " " + ab.name(x);
    out += '\n';

    switch (inst.kind) {
        case InstanceKind::formulas:
            for (ElementId x = 0; x < ab.size(); ++x)
                out += ab.name(x) + ": " + format_formula(inst.formulas.raw(x), ab) +
                       "\n";
            break;
        case InstanceKind::ercs:
            for (const Erc& e : inst.ercs.ercs())
                out += join_names(ab, e.a) + " | " + join_names(ab, e.b) + "\n";
            break;
        default:
            if (inst.root >= 0) out += "root " + ab.name(inst.root) + "\n";
            for (size_t i = 0; i < inst.arcs.size(); ++i) {
                out += ab.name(inst.arcs[i].first) + " " +
                       ab.name(inst.arcs[i].second);
                if (inst.kind == InstanceKind::weighted_digraph)
                    out += " " + format_weight(inst.arc_weights[i]);
                out += '\n';
            }
            break;
    }
    return out;
}

std::unique_ptr<Cds> Instance::make_cds() const {
    switch (kind) {
        case InstanceKind::formulas: return std::make_unique<FormulaCds>(formulas);
        case InstanceKind::ercs: return std::make_unique<ErcCds>(ercs);
        case InstanceKind::digraph:
        case InstanceKind::graph: return std::make_unique<VertexSearchCds>(*graph);
        case InstanceKind::chordal: return std::make_unique<SimplicialCds>(*chordal);
        case InstanceKind::weighted_digraph:
            return std::make_unique<VertexSearchCds>(weighted->graph());
    }
    throw UsageError("instance has no backend");
}

ExplicitMps Instance::tables(int limit) const {
    if (size() > limit)
        throw LimitError("instance with " + std::to_string(size()) +
                         " elements exceeds the brute-force limit of " +
                         std::to_string(limit));
    switch (kind) {
        case InstanceKind::formulas: return mps_from_formulas(formulas);
        case InstanceKind::ercs: return mps_from_ercs(ercs);
        case InstanceKind::digraph:
        case InstanceKind::graph: return vertex_search_mps(*graph);
        case InstanceKind::weighted_digraph:
            return vertex_search_mps(weighted->graph());
        case InstanceKind::chordal: {
            const ChordalGraph& g = *chordal;
            return ExplicitMps::from_predicate(size(), [&g](ElementId v, Mask chosen) {
                // simplicial among what remains: the unchosen neighbors
                // must be pairwise adjacent
                std::vector<ElementId> rest;
                for (ElementId u : g.neighbors(v))
                    if (!(chosen >> u & 1)) rest.push_back(u);
                for (size_t i = 0; i < rest.size(); ++i)
                    for (size_t j = i + 1; j < rest.size(); ++j)
                        if (!g.adjacent(rest[i], rest[j])) return false;
                return true;
            });
        }
    }
    throw UsageError("instance has no backend");
}

Word parse_word(const Alphabet& ab, std::string_view text) {
    const int n = ab.size();
    std::vector<std::string> toks = tokens_of(text);

    Word word;
    bool packed = false;
    if (toks.size() == 1 && static_cast<int>(toks[0].size()) == n && n > 0) {
        packed = true;
        for (ElementId x = 0; x < n; ++x)
            if (ab.name(x).size() != 1) packed = false;
        if (packed && ab.find(toks[0]))
            packed = false;  // a real n-char name wins over the packed reading
    }
    if (packed) {
        for (char c : toks[0]) {
            auto id = ab.find(std::string(1, c));
            if (!id)
                throw InputError("unknown element '" + std::string(1, c) +
                                 "' in order");
            word.push_back(*id);
        }
    } else {
        for (const auto& t : toks) {
            auto id = ab.find(t);
            if (!id) throw InputError("unknown element '" + t + "' in order");
            word.push_back(*id);
        }
    }

    if (static_cast<int>(word.size()) != n)
        throw InputError("order names " + std::to_string(word.size()) + " of " +
                         std::to_string(n) + " elements");
    std::vector<std::uint8_t> seen(n, 0);
    for (ElementId x : word) {
        if (seen[x]) throw InputError("order repeats element '" + ab.name(x) + "'");
        seen[x] = 1;
    }
    return word;
}

}  // namespace antsort
