#pragma once

#include <random>
#include <utility>

#include "antsort/core.hpp"

// Shared fixtures. The three-element instance below (a and b free, c after
// either) is small enough to check by hand and shows up all over the tests:
// its full-length words are exactly abc, acb, bac, bca.
namespace support {

using namespace antsort;

inline ExplicitMps example2() {
    return ExplicitMps::from_predicate(3, [](ElementId x, Mask chosen) {
        if (x == 2) return (chosen & 0b011) != 0;
        return true;
    });
}

inline const std::vector<Word>& example2_perms() {
    static const std::vector<Word> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}};
    return perms;
}

// chain a < b < ... : element i needs all of 0..i-1
inline ExplicitMps chain(int n) {
    return ExplicitMps::from_predicate(n, [](ElementId x, Mask chosen) {
        Mask below = (Mask{1} << x) - 1;
        return (chosen & below) == below;
    });
}

// no constraints at all; every permutation is admissible
inline ExplicitMps free_mps(int n) {
    return ExplicitMps::from_predicate(n, [](ElementId, Mask) { return true; });
}

// random monotone tables: a handful of random anchor sets per element,
// available once any anchor is fully chosen
inline ExplicitMps random_anchor_mps(int n, std::mt19937_64& rng) {
    std::vector<std::vector<Mask>> anchors(n);
    for (int x = 0; x < n; ++x) {
        int k = static_cast<int>(rng() % 3);
        for (int j = 0; j < k; ++j)
            anchors[x].push_back(static_cast<Mask>(rng()) &
                                 ((Mask{1} << n) - 1) & ~(Mask{1} << x));
        if (k == 0) anchors[x].push_back(0);
    }
    return ExplicitMps::from_predicate(n, [&](ElementId x, Mask chosen) {
        for (Mask a : anchors[x])
            if ((a & ~chosen) == 0) return true;
        return false;
    });
}

// random connected chordal graph: each new vertex joins a clique made of
// an earlier vertex plus a random subset of that vertex's own birth clique
inline std::vector<std::pair<int, int>> random_chordal_edges(
    int n, std::mt19937_64& rng) {
    std::vector<std::vector<int>> birth(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % v);
        std::vector<int> q{u};
        for (int w : birth[u])
            if (w != u && rng() % 2) q.push_back(w);
        for (int w : q) edges.push_back({w, v});
        q.push_back(v);
        birth[v] = std::move(q);
    }
    return edges;
}

inline Word identity_word(int n) {
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = i;
    return w;
}

inline Word shuffled_word(int n, std::mt19937_64& rng) {
    Word w = identity_word(n);
    std::shuffle(w.begin(), w.end(), rng);
    return w;
}

}  // namespace support
