#include "antsort/chordal.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace antsort {
namespace {

// Maximum cardinality search: repeatedly visit the vertex with the most
// visited neighbors. Reversing the visit order gives a perfect
// elimination order exactly when the graph is chordal.
Word mcs_visit_order(int n, const std::vector<std::vector<ElementId>>& adj) {
    std::vector<int> weight(n, 0);
    std::vector<std::uint8_t> visited(n, 0);
    std::vector<std::vector<int>> buckets(n + 1);
    for (int v = n - 1; v >= 0; --v) buckets[0].push_back(v);
    int maxw = 0;
    Word order;
    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (;;) {
            while (buckets[maxw].empty()) --maxw;
            v = buckets[maxw].back();
            buckets[maxw].pop_back();
            if (!visited[v] && weight[v] == maxw) break;  // else stale
        }
        visited[v] = 1;
        order.push_back(v);
        for (int u : adj[v])
            if (!visited[u]) {
                ++weight[u];
                buckets[weight[u]].push_back(u);
                maxw = std::max(maxw, weight[u]);
            }
    }
    return order;
}

struct Elimination {
    Word peo;
    std::vector<int> pos;                     // vertex -> elimination index
    std::vector<std::vector<ElementId>> madj;  // neighbors leaving later
    std::vector<ElementId> parent;             // earliest of madj, or -1
};

Elimination eliminate(int n, const std::vector<std::vector<ElementId>>& adj,
                      Word peo) {
    Elimination e;
    e.pos.assign(n, 0);
    for (int i = 0; i < n; ++i) e.pos[peo[i]] = i;
    e.madj.resize(n);
    e.parent.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        for (int u : adj[v])
            if (e.pos[u] > e.pos[v]) {
                e.madj[v].push_back(u);
                if (e.parent[v] == -1 || e.pos[u] < e.pos[e.parent[v]])
                    e.parent[v] = u;
            }
    }
    e.peo = std::move(peo);
    return e;
}

// The elimination test: for each v, the later neighbors besides the
// earliest one must all neighbor that earliest one. Deferred to the
// earliest one's own turn so the whole pass is linear.
void require_peo(int n, const Elimination& e) {
    std::vector<std::vector<std::pair<ElementId, ElementId>>> deferred(n);
    std::vector<int> stamp(n, -1);
    for (int i = 0; i < n; ++i) {
        ElementId v = e.peo[i];
        if (!deferred[v].empty()) {
            for (ElementId u : e.madj[v]) stamp[u] = v;
            for (auto [w, src] : deferred[v]) {
                if (stamp[w] != v)
                    throw InputError(
                        "graph: not chordal; vertices " + std::to_string(v) +
                        " and " + std::to_string(w) +
                        " both survive vertex " + std::to_string(src) +
                        " but are not adjacent");
            }
        }
        for (ElementId w : e.madj[v])
            if (w != e.parent[v]) deferred[e.parent[v]].push_back({w, v});
    }
}

}  // namespace

ChordalGraph::ChordalGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
    if (n < 0) throw InputError("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("graph: edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u == v) continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    Word visit = mcs_visit_order(n, adj_);
    Word peo(visit.rbegin(), visit.rend());
    Elimination e = eliminate(n, adj_, std::move(peo));
    require_peo(n, e);
    peo_ = std::move(e.peo);
}

bool ChordalGraph::adjacent(ElementId u, ElementId v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

CliqueTree build_clique_tree(const ChordalGraph& g) {
    int n = g.size();
    std::vector<std::vector<ElementId>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    Elimination e = eliminate(n, adj, g.elimination_order());

    // v's candidate clique is v plus its later neighbors. It is maximal
    // unless an earlier vertex's candidate grew past it by exactly v;
    // absorb() follows those containments up to the maximal host.
    std::vector<ElementId> absorbing_child(n, -1);
    std::vector<ElementId> host(n, -1);
    for (int i = 0; i < n; ++i) {
        ElementId v = e.peo[i];
        host[v] = (absorbing_child[v] == -1) ? v : host[absorbing_child[v]];
        ElementId p = e.parent[v];
        if (p != -1 && absorbing_child[p] == -1 &&
            e.madj[v].size() == e.madj[p].size() + 1)
            absorbing_child[p] = v;
    }

    CliqueTree t;
    t.home.assign(n, -1);
    std::vector<int> index(n, -1);
    for (int i = 0; i < n; ++i) {
        ElementId v = e.peo[i];
        if (host[v] != v) continue;
        index[v] = static_cast<int>(t.cliques.size());
        std::vector<ElementId> clique = e.madj[v];
        clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        t.cliques.push_back(std::move(clique));
    }
    for (int v = 0; v < n; ++v) t.home[v] = index[host[v]];

    // each clique hangs off the clique holding its starter's survivors;
    // the starter is its last member to leave, so its own parent lives in
    // a different clique and no edge can point back home
    std::vector<ElementId> starter(t.cliques.size(), -1);
    for (int i = 0; i < n; ++i) starter[t.home[e.peo[i]]] = e.peo[i];
    for (std::size_t k = 0; k < t.cliques.size(); ++k) {
        ElementId u = starter[k];
        if (e.parent[u] == -1) continue;  // first clique of its component
        t.edges.push_back({static_cast<int>(k), t.home[e.parent[u]],
                           static_cast<int>(e.madj[u].size())});
    }
    return t;
}

bool clique_tree_coherent(const CliqueTree& t) {
    int nodes = static_cast<int>(t.cliques.size());
    std::vector<std::vector<int>> adj(nodes);
    for (const auto& e : t.edges) {
        std::vector<ElementId> sep;
        std::set_intersection(t.cliques[e.x].begin(), t.cliques[e.x].end(),
                              t.cliques[e.y].begin(), t.cliques[e.y].end(),
                              std::back_inserter(sep));
        if (static_cast<int>(sep.size()) != e.sep) return false;
        adj[e.x].push_back(e.y);
        adj[e.y].push_back(e.x);
    }
    for (int a = 0; a < nodes; ++a) {
        // BFS tree from a; then walk each b's path back through parents
        std::vector<int> from(nodes, -2);
        from[a] = -1;
        std::vector<int> queue{a};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int u : adj[queue[i]])
                if (from[u] == -2) {
                    from[u] = queue[i];
                    queue.push_back(u);
                }
        for (int b = 0; b < nodes; ++b) {
            if (from[b] == -2) continue;  // other component of the forest
            std::vector<ElementId> need;
            std::set_intersection(t.cliques[a].begin(), t.cliques[a].end(),
                                  t.cliques[b].begin(), t.cliques[b].end(),
                                  std::back_inserter(need));
            for (int at = b; at != -1; at = from[at])
                if (!std::includes(t.cliques[at].begin(), t.cliques[at].end(),
                                   need.begin(), need.end()))
                    return false;
        }
    }
    return true;
}

SimplicialCds::SimplicialCds(const ChordalGraph& g) : n_(g.size()) {
    CliqueTree t = build_clique_tree(g);
    members0_ = std::move(t.cliques);
    home0_ = std::move(t.home);
    cnt0_.assign(n_, 0);
    for (const auto& clique : members0_)
        for (ElementId v : clique) ++cnt0_[v];

    buckets0_.resize(members0_.size());
    for (std::size_t x = 0; x < members0_.size(); ++x)
        buckets0_[x].resize(members0_[x].size() + 1);
    auto append = [&](int node, int s, int other) {
        int rec = static_cast<int>(records0_.size());
        records0_.push_back({other, -1});
        Slot& slot = buckets0_[node][s];
        if (slot.head == -1)
            slot.head = rec;
        else
            records0_[slot.tail].next = rec;
        slot.tail = rec;
    };
    for (const auto& e : t.edges) {
        append(e.x, e.sep, e.y);
        append(e.y, e.sep, e.x);
    }
}

std::vector<ElementId> SimplicialCds::init() {
    started_ = true;
    work_ = 0;
    buckets_ = buckets0_;
    records_ = records0_;
    parent_.resize(members0_.size());
    for (std::size_t x = 0; x < parent_.size(); ++x)
        parent_[x] = static_cast<int>(x);
    size_.resize(members0_.size());
    for (std::size_t x = 0; x < size_.size(); ++x)
        size_[x] = static_cast<int>(members0_[x].size());
    cnt_ = cnt0_;
    removed_.assign(n_, 0);
    std::vector<ElementId> out;
    for (ElementId v = 0; v < n_; ++v)
        if (cnt_[v] == 1) out.push_back(v);
    return out;
}

int SimplicialCds::find(int x) const {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

void SimplicialCds::splice(int from, int to, int s) {
    Slot& f = buckets_[from][s];
    if (f.head == -1) return;
    Slot& t = buckets_[to][s];
    if (t.head == -1) {
        t = f;
    } else {
        records_[t.tail].next = f.head;
        t.tail = f.tail;
    }
    f.head = f.tail = -1;
}

std::vector<ElementId> SimplicialCds::step(ElementId v) {
    if (!started_) throw UsageError("simplicial cds: step before init");
    if (v < 0 || v >= n_)
        throw UsageError("simplicial cds: vertex out of range");
    // the caller steps reported vertices only, so v sits in exactly one
    // live clique and that clique is reachable from its build-time home
    removed_[v] = 1;
    int x = find(home0_[v]);
    --size_[x];
    ++work_;
    std::vector<ElementId> out;
    if (size_[x] == 0) return out;

    // K(x) stopped being maximal iff some incident separator now covers
    // it; all candidates sit in the bucket for its current size
    int s = size_[x];
    Slot& slot = buckets_[x][s];
    while (slot.head != -1) {
        int rec = slot.head;
        slot.head = records_[rec].next;
        if (slot.head == -1) slot.tail = -1;
        ++work_;
        int z = find(records_[rec].other);
        if (z == x) continue;  // leftover twin of an already-merged edge

        // merge x into z: z's members and size are unchanged because
        // K(x) is a subset; x's edges keep their separator sizes
        parent_[x] = z;
        for (int s2 = 0; s2 <= s; ++s2) {
            ++work_;
            splice(x, z, s2);
        }
        for (ElementId u : members0_[x]) {
            ++work_;
            if (removed_[u]) continue;
            if (--cnt_[u] == 1) out.push_back(u);
        }
        break;
    }
    return out;
}

SimplicialCds::TreeView SimplicialCds::live_tree() const {
    if (!started_) throw UsageError("simplicial cds: live_tree before init");
    TreeView view;
    std::vector<int> remap(members0_.size(), -1);
    for (std::size_t x = 0; x < members0_.size(); ++x) {
        if (parent_[x] != static_cast<int>(x) || size_[x] == 0) continue;
        remap[x] = static_cast<int>(view.cliques.size());
        std::vector<ElementId> live;
        for (ElementId v : members0_[x])
            if (!removed_[v]) live.push_back(v);
        view.cliques.push_back(std::move(live));
    }
    std::vector<std::array<int, 3>> seen;
    for (std::size_t x = 0; x < members0_.size(); ++x) {
        if (remap[x] == -1) continue;
        for (std::size_t s = 0; s < buckets_[x].size(); ++s) {
            for (int rec = buckets_[x][s].head; rec != -1;
                 rec = records_[rec].next) {
                int z = find(records_[rec].other);
                if (z == static_cast<int>(x) || remap[z] == -1) continue;
                int a = remap[x], b = remap[z];
                seen.push_back({std::min(a, b), std::max(a, b),
                                static_cast<int>(s)});
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (const auto& [a, b, s] : seen) view.edges.push_back({a, b, s});
    return view;
}

bool is_simplicial_after(const ChordalGraph& g,
                         const std::vector<std::uint8_t>& removed,
                         ElementId v) {
    std::vector<ElementId> live;
    for (ElementId u : g.neighbors(v))
        if (!removed[u]) live.push_back(u);
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            if (!g.adjacent(live[i], live[j])) return false;
    return true;
}

bool is_peo(const ChordalGraph& g, const Word& order) {
    int n = g.size();
    std::vector<std::uint8_t> seen(n, 0);
    if (static_cast<int>(order.size()) != n)
        throw UsageError("elimination check needs a full permutation");
    for (ElementId v : order) {
        if (v < 0 || v >= n || seen[v])
            throw UsageError("elimination check needs a full permutation");
        seen[v] = 1;
    }
    std::vector<std::uint8_t> removed(n, 0);
    for (ElementId v : order) {
        if (!is_simplicial_after(g, removed, v)) return false;
        removed[v] = 1;
    }
    return true;
}

std::uint64_t count_peos(const ChordalGraph& g, int limit) {
    int n = g.size();
    if (n > limit || n > 20)
        throw LimitError("elimination-order count enumerates 2^" +
                         std::to_string(n) +
                         " removal sets; raise the limit to allow it");
    if (n == 0) return 1;
    std::vector<Mask> admask(n, 0);
    for (int v = 0; v < n; ++v)
        for (ElementId u : g.neighbors(v)) admask[v] |= Mask{1} << u;
    Mask full = (Mask{1} << n) - 1;
    std::vector<std::uint64_t> dp(std::size_t{1} << n, 0);
    dp[full] = 1;
    for (Mask mask = full; mask-- > 0;) {
        std::uint64_t total = 0;
        for (int v = 0; v < n; ++v) {
            Mask bit = Mask{1} << v;
            if (mask & bit) continue;
            Mask nb = admask[v] & ~mask;
            bool simplicial = true;
            for (int u = 0; u < n && simplicial; ++u)
                if ((nb >> u) & 1u)
                    if ((nb & ~admask[u] & ~(Mask{1} << u)) != 0)
                        simplicial = false;
            if (simplicial) total += dp[mask | bit];
        }
        dp[mask] = total;
    }
    return dp[0];
}

}  // namespace antsort
