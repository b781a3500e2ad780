#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "antsort/core.hpp"
#include "antsort/sorter.hpp"

namespace antsort {

// A digraph (or symmetrized undirected graph) in which every vertex is
// reachable from the root; construction rejects anything else. Self-loops
// and duplicate arcs are dropped.
class RootedGraph {
public:
    RootedGraph(int n, std::vector<std::pair<int, int>> arcs, int root,
                bool directed);

    int size() const { return n_; }
    int arc_count() const { return m_; }
    int root() const { return root_; }
    bool directed() const { return directed_; }
    const std::vector<ElementId>& out(ElementId v) const { return out_.at(v); }
    const std::vector<ElementId>& in(ElementId v) const { return in_.at(v); }

private:
    int n_ = 0, m_ = 0, root_ = 0;
    bool directed_ = true;
    std::vector<std::vector<ElementId>> out_, in_;
};

// Search order availability: the root starts available, and a vertex
// becomes available when its first chosen in-neighbor reports it. Each
// arc is walked once per epoch.
class VertexSearchCds : public Cds {
public:
    explicit VertexSearchCds(const RootedGraph& g);

    int universe_size() const override { return g_->size(); }
    std::vector<ElementId> init() override;
    std::vector<ElementId> step(ElementId x) override;
    std::uint64_t work() const override { return work_; }

private:
    const RootedGraph* g_;
    bool started_ = false;
    std::vector<std::uint8_t> reported_;
    std::uint64_t work_ = 0;
};

// Tables from first principles: under a chosen set X, take the part of X
// the search can actually have visited (reachable from the root inside X);
// a vertex is available when it is the root or has an in-neighbor there.
// Monotone in X by construction and independent of the counter path.
ExplicitMps vertex_search_mps(const RootedGraph& g);

}  // namespace antsort
