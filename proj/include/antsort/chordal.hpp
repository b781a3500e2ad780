#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// Undirected graph with no induced cycle of four or more vertices.
// Construction runs a maximum-cardinality search, keeps the elimination
// order it induces, and rejects the graph if that order fails the
// elimination test (which on these graphs it cannot).
class ChordalGraph {
public:
    ChordalGraph(int n, std::vector<std::pair<int, int>> edges);

    int size() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<ElementId>& neighbors(ElementId v) const {
        return adj_.at(v);
    }
    bool adjacent(ElementId u, ElementId v) const;

    // a perfect elimination order; position 0 leaves first
    const Word& elimination_order() const { return peo_; }

private:
    int n_ = 0, m_ = 0;
    std::vector<std::vector<ElementId>> adj_;
    Word peo_;
};

// One node per maximal clique; edges carry separator sizes. For any two
// nodes, every node on the tree path between them contains their clique
// intersection.
struct CliqueTree {
    std::vector<std::vector<ElementId>> cliques;  // each sorted by id
    struct Edge {
        int x, y;
        int sep;  // |cliques[x] n cliques[y]|
    };
    std::vector<Edge> edges;
    std::vector<int> home;  // vertex -> some clique containing it
};

CliqueTree build_clique_tree(const ChordalGraph& g);

// the path-scan definition, quadratic; for tests and small instances
bool clique_tree_coherent(const CliqueTree& t);

// Availability = membership in exactly one maximal clique. step(v) shrinks
// v's clique; if the shrunken clique sank into a neighbor, the two tree
// nodes merge and every vertex of the sunken clique loses one containing
// clique. Bucketed edge records make the merge cost proportional to the
// sunken clique, so a full epoch costs O(m + n).
class SimplicialCds : public Cds {
public:
    explicit SimplicialCds(const ChordalGraph& g);

    int universe_size() const override { return n_; }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;
    std::uint64_t work() const override { return work_; }

    // live tree nodes with their current members and resolved edges,
    // reconstructed for inspection; quadratic, tests only
    struct TreeView {
        std::vector<std::vector<ElementId>> cliques;
        std::vector<CliqueTree::Edge> edges;
    };
    TreeView live_tree() const;

private:
    int find(int x) const;  // halves the path as it walks
    void splice(int from, int to, int upto);

    int n_ = 0;
    bool started_ = false;
    std::uint64_t work_ = 0;

    // pristine image, copied out at every init
    struct Slot {
        int head = -1, tail = -1;
    };
    std::vector<std::vector<ElementId>> members0_;  // node -> build members
    std::vector<std::vector<Slot>> buckets0_;       // node -> per-size slots
    struct Record {
        int other;  // tree node on the far side, resolved through find()
        int next;
    };
    std::vector<Record> records0_;
    std::vector<int> cnt0_;   // vertex -> containing-clique count
    std::vector<int> home0_;  // vertex -> build-time containing node

    // per-epoch state
    std::vector<std::vector<Slot>> buckets_;
    std::vector<Record> records_;
    mutable std::vector<int> parent_;  // absorbed node -> survivor
    std::vector<int> size_;    // node -> live member count
    std::vector<int> cnt_;
    std::vector<std::uint8_t> removed_;
};

// naive oracle: every earlier vertex is simplicial among what remains
bool is_simplicial_after(const ChordalGraph& g,
                         const std::vector<std::uint8_t>& removed,
                         ElementId v);
bool is_peo(const ChordalGraph& g, const Word& order);

// brute-force count over removal sequences; LimitError past the limit
std::uint64_t count_peos(const ChordalGraph& g, int limit = kBruteForceLimit);

}  // namespace antsort
