#include "antsort/graph.hpp"

#include <algorithm>

namespace antsort {

RootedGraph::RootedGraph(int n, std::vector<std::pair<int, int>> arcs,
                         int root, bool directed)
    : n_(n), root_(root), directed_(directed) {
    if (n <= 0) throw InputError("graph: needs at least a root vertex");
    if (root < 0 || root >= n)
        throw InputError("graph: root " + std::to_string(root) +
                         " out of range");
    for (auto [u, v] : arcs)
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("graph: arc (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") out of range");
    if (!directed) {
        std::size_t given = arcs.size();
        for (std::size_t i = 0; i < given; ++i)
            arcs.emplace_back(arcs[i].second, arcs[i].first);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    out_.resize(n);
    in_.resize(n);
    for (auto [u, v] : arcs) {
        if (u == v) continue;
        out_[u].push_back(v);
        in_[v].push_back(u);
        ++m_;
    }
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<int> frontier{root};
    seen[root] = 1;
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        for (int u : out_[v])
            if (!seen[u]) {
                seen[u] = 1;
                frontier.push_back(u);
            }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw InputError("graph: vertex " + std::to_string(v) +
                             " unreachable from the root");
}

VertexSearchCds::VertexSearchCds(const RootedGraph& g) : g_(&g) {}

std::vector<ElementId> VertexSearchCds::init() {
    started_ = true;
    work_ = 0;
    reported_.assign(g_->size(), 0);
    reported_[g_->root()] = 1;
    return {g_->root()};
}

std::vector<ElementId> VertexSearchCds::step(ElementId x) {
    if (!started_) throw UsageError("vertex search cds: step before init");
    if (x < 0 || x >= g_->size())
        throw UsageError("vertex search cds: vertex out of range");
    std::vector<ElementId> out;
    for (ElementId u : g_->out(x)) {
        ++work_;
        if (!reported_[u]) {
            reported_[u] = 1;
            out.push_back(u);
        }
    }
    return out;
}

ExplicitMps vertex_search_mps(const RootedGraph& g) {
    int n = g.size();
    return ExplicitMps::from_predicate(n, [&](ElementId x, Mask chosen) {
        if (x == g.root()) return true;
        if (!((chosen >> g.root()) & 1u)) return false;
        Mask visited = Mask{1} << g.root();
        std::vector<int> frontier{g.root()};
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            for (int u : g.out(v)) {
                Mask bit = Mask{1} << u;
                if ((chosen & bit) && !(visited & bit)) {
                    visited |= bit;
                    frontier.push_back(u);
                }
            }
        }
        for (int u : g.in(x))
            if ((visited >> u) & 1u) return true;
        return false;
    });
}

}  // namespace antsort
