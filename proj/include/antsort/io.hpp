#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antsort/chordal.hpp"
#include "antsort/core.hpp"
#include "antsort/dijkstra.hpp"
#include "antsort/erc.hpp"
#include "antsort/formula.hpp"
#include "antsort/graph.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// Line-oriented instance files: a kind header, an "alphabet" line fixing
// element ids by position, then kind-specific body lines. "#" starts a
// comment, blank lines are skipped. parse and print agree on a canonical
// form: whatever print emits parses back to the same instance and prints
// to the same bytes.
enum class InstanceKind {
    formulas,
    ercs,
    digraph,
    graph,
    chordal,
    weighted_digraph,
};

const char* kind_name(InstanceKind k);

struct Instance {
    InstanceKind kind = InstanceKind::formulas;
    Alphabet alphabet;

    // exactly the payload matching the kind is engaged
    FormulaSystem formulas;
    ErcSet ercs;
    std::optional<RootedGraph> graph;         // digraph / graph
    std::optional<ChordalGraph> chordal;
    std::optional<WeightedDigraph> weighted;

    // graph bodies as written, for printing
    int root = -1;
    std::vector<std::pair<int, int>> arcs;
    std::vector<double> arc_weights;  // parallel to arcs, weighted kind only

    int size() const { return alphabet.size(); }

    // availability backend for this instance; keeps a pointer back into
    // the instance, which must outlive it
    std::unique_ptr<Cds> make_cds() const;

    // brute-force table view of the same availability
    ExplicitMps tables(int limit = kBruteForceLimit) const;
};

// Syntax errors carry the 1-based line; semantic rejections (negation
// tokens, unreachable vertices, chordality, bad constraints) surface from
// the backend constructors as InputError.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(std::string_view text);
Instance parse_instance_file(const std::string& path);

std::string print_instance(const Instance& inst);

// One permutation of the instance alphabet: either whitespace-separated
// names or, when every name is a single character, one run like "bca".
Word parse_word(const Alphabet& ab, std::string_view text);

}  // namespace antsort
