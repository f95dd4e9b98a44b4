#pragma once

#include <algorithm>
#include <vector>

#include "chordalkit/graph.hpp"

// Small independent oracles shared by the unit tests. These deliberately
// avoid the library's fast paths: plain subset enumeration and permutation
// search only, so they can vouch for the real implementations.
namespace testing_oracles {

using chordalkit::Graph;
using chordalkit::VertexSet;

// Does some subset of size >= 4 induce a cycle? (connected 2-regular check)
inline bool has_induced_long_cycle(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        if (s.count() < 4) continue;
        bool two_regular = true;
        for (int v : s)
            if ((g.neighbors(v) & s).count() != 2) { two_regular = false; break; }
        if (!two_regular) continue;
        if (g.induced(s).graph.connected()) return true;
    }
    return false;
}

inline bool brute_chordal(const Graph& g) { return !has_induced_long_cycle(g); }

// All maximal cliques by filtering every subset.
inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> cliques;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        if (!g.is_clique(s)) continue;
        bool maximal = true;
        for (int v : g.vertices() - s)
            if (s.subset_of(g.neighbors(v))) { maximal = false; break; }
        if (maximal) cliques.push_back(s);
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

// Isomorphism by trying every vertex permutation (n <= 8 or so).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Relabel g by a permutation: new vertex perm[v] takes v's role.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edge_list(g.vertex_count(), edges);
}

inline Graph path_graph_pn(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph_cn(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete_graph_kn(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

} // namespace testing_oracles
