#include "chordalkit/families.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "chordalkit/canonical.hpp"
#include "chordalkit/chordal.hpp"
#include "combinations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chordalkit {

Graph k_sun(int k) {
    if (k < 3) throw graph_error("k_sun requires k >= 3");
    if (2 * k > Graph::max_vertices) throw size_cap_error("k_sun exceeds 64 vertices");
    GraphBuilder b(2 * k);
    b.clique(VertexSet::first_n(k));
    for (int i = 0; i < k; ++i) {
        b.edge(k + i, i);
        b.edge(k + i, (i + 1) % k);
    }
    Graph g = b.build();
    assert(is_chordal(g).chordal);
    return g;
}

Graph g1() {
    // a b c d x y z = 0..6; K4 on {a,b,c,d}; x-a x-d, z-b z-c, y-c y-d
    Graph g = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                        {4, 0}, {4, 3}, {6, 1}, {6, 2}, {5, 2}, {5, 3}});
    g.set_labels({"a", "b", "c", "d", "x", "y", "z"});
    return g;
}

Graph g2() {
    // the 3-sun: core {a,b,c}; x-a x-b, y-b y-c, z-a z-c
    Graph g = Graph::from_edge_list(
        6, {{0, 1}, {0, 2}, {1, 2}, {0, 5}, {2, 5}, {1, 4}, {2, 4}, {3, 0}, {3, 1}});
    g.set_labels({"a", "b", "c", "x", "y", "z"});
    return g;
}

Graph g3() {
    // a b c d e x y z = 0..7; a and b joined to each other and to c, d, e;
    // e-d and d-c but no c-e; x-a x-b, y-b y-c, z-a z-e
    Graph g = Graph::from_edge_list(8, {{0, 1}, {0, 4}, {0, 3}, {0, 2}, {1, 4}, {1, 3},
                                        {1, 2}, {4, 3}, {3, 2}, {0, 7}, {4, 7}, {1, 6},
                                        {2, 6}, {0, 5}, {1, 5}});
    g.set_labels({"a", "b", "c", "d", "e", "x", "y", "z"});
    return g;
}

Graph f11_8() {
    // core {u,v,w}; x and y joined to the whole core; rays on the core pairs
    Graph g = Graph::from_edge_list(8, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2},
                                        {4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}, {6, 0},
                                        {6, 2}, {7, 1}, {7, 2}});
    g.set_labels({"u", "v", "w", "x", "y", "r1", "r2", "r3"});
    return g;
}

Graph f11_4k(int k) {
    if (k < 2) throw graph_error("f11_4k requires k >= 2");
    if (4 * k > Graph::max_vertices) throw size_cap_error("f11_4k exceeds 64 vertices");
    const int m = 2 * k - 1; // core size, odd
    GraphBuilder b(4 * k);
    b.clique(VertexSet::first_n(m));
    for (int i = 0; i < m; ++i) {
        b.edge(m + i, i);
        b.edge(m + i, (i + 1) % m);
    }
    const int x = 2 * m, y = 2 * m + 1;
    for (int c = 0; c < m; ++c) {
        b.edge(x, c);
        b.edge(y, c);
    }
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("c" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) names.push_back("r" + std::to_string(i + 1));
    names.push_back("x");
    names.push_back("y");
    b.labels(std::move(names));
    Graph g = b.build();
    assert(is_chordal(g).chordal);
    return g;
}

PointedGraph s_directed_pointed(int type, int t) {
    switch (type) {
    case 1: {
        Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
        return {std::move(g), 0, 2};
    }
    case 2: {
        // u a b c d v = 0..5; edges ua uc ab bc ac bd cd bv dv
        Graph g = Graph::from_edge_list(
            6, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {1, 3}, {2, 4}, {3, 4}, {2, 5}, {4, 5}});
        return {std::move(g), 0, 5};
    }
    case 3: {
        // u a b c d v x y = 0..7; triangles {u,a,c} {v,b,d},
        // 4-cliques {a,b,c,d} {x,a,b,c} {y,a,b,d}
        GraphBuilder b(8);
        b.clique(VertexSet::of({0, 1, 3}));
        b.clique(VertexSet::of({5, 2, 4}));
        b.clique(VertexSet::of({1, 2, 3, 4}));
        b.clique(VertexSet::of({6, 1, 2, 3}));
        b.clique(VertexSet::of({7, 1, 2, 4}));
        return {b.build(), 0, 5};
    }
    case 4: {
        if (t < 1) throw graph_error("type 4 requires t >= 1");
        const int clique_size = 2 * t + 3; // z_0 .. z_{2t+2}
        const int n = 4 * t + 5;
        if (n > Graph::max_vertices) throw size_cap_error("type 4 shape exceeds 64 vertices");
        const int u = n - 2, v = n - 1;
        GraphBuilder b(n);
        b.clique(VertexSet::first_n(clique_size));
        for (int kk = 1; kk <= 2 * t; ++kk) {
            int prime = clique_size + kk - 1; // z'_k
            b.edge(prime, kk);
            b.edge(prime, kk + 1);
        }
        b.edge(u, 0);
        b.edge(u, 1);
        b.edge(v, 2 * t + 1);
        b.edge(v, 2 * t + 2);
        return {b.build(), u, v};
    }
    default:
        throw graph_error("special connection type must be 1..4");
    }
}

TaResult build_ta(const Graph& f11, std::array<int, 3> triple) {
    const int n = f11.vertex_count();
    if (n % 4 != 0 || n < 12) throw graph_error("build_ta expects an f11_4k graph, k >= 3");
    const int m = n / 2 - 1; // core size

    // verify the generator layout before trusting it
    for (int c = 0; c < m; ++c)
        if (f11.degree(c) != m + 3) throw graph_error("build_ta: unexpected core structure");
    for (int i = 0; i < m; ++i)
        if (f11.neighbors(m + i) != VertexSet::of({i, (i + 1) % m}))
            throw graph_error("build_ta: unexpected ray structure");

    VertexSet a_set;
    for (int r : triple) a_set.insert(r);
    if (!is_asteroidal_set(f11, a_set))
        throw graph_error("build_ta: the given triple is not asteroidal");

    VertexSet covered_cores;
    for (int r : triple) covered_cores |= f11.neighbors(r);

    // rays i and i+1 share core vertex (i+1) mod m; when that vertex is in
    // N(A) their cliques must attach to opposite central cliques
    std::vector<std::vector<int>> constraint(m);
    for (int i = 0; i < m; ++i) {
        int shared = (i + 1) % m;
        if (covered_cores.contains(shared)) {
            int j = (i + 1) % m;
            constraint[i].push_back(j);
            constraint[j].push_back(i);
        }
    }

    // 2-colour: seed each component at its smallest A-ray (side x), else
    // alternate free rays by index
    std::vector<int> side(m, -1);
    for (int r : triple) {
        int ray = r - m;
        if (side[ray] != -1) continue;
        std::vector<int> queue{ray};
        side[ray] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int cur = queue[head];
            for (int nxt : constraint[cur]) {
                if (side[nxt] == -1) {
                    side[nxt] = 1 - side[cur];
                    queue.push_back(nxt);
                } else if (side[nxt] == side[cur]) {
                    return {std::nullopt,
                            "rays " + std::to_string(m + cur) + " and " + std::to_string(m + nxt) +
                                " share a core vertex of N(A) but are forced to one side"};
                }
            }
        }
    }
    int next_side = 0;
    for (int ray = 0; ray < m; ++ray)
        if (side[ray] == -1) {
            side[ray] = next_side;
            next_side = 1 - next_side;
        }

    CliqueTree tree;
    tree.graph = f11;
    tree.cliques = maximal_cliques(f11);
    const int x = n - 2, y = n - 1;
    int qx = -1, qy = -1;
    std::vector<int> ray_clique(m, -1);
    for (int q = 0; q < tree.cliques.size(); ++q) {
        VertexSet c = tree.cliques.cliques[q];
        if (c.contains(x)) qx = q;
        if (c.contains(y)) qy = q;
        for (int ray = 0; ray < m; ++ray)
            if (c.contains(m + ray)) ray_clique[ray] = q;
    }
    tree.edges.emplace_back(std::min(qx, qy), std::max(qx, qy));
    for (int ray = 0; ray < m; ++ray) {
        int anchor = side[ray] == 0 ? qx : qy;
        tree.edges.emplace_back(std::min(anchor, ray_clique[ray]),
                                std::max(anchor, ray_clique[ray]));
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    if (!validate_clique_tree(tree))
        throw graph_error("internal error: T_A failed clique tree validation");
    return {std::move(tree), ""};
}

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) b.edge(i, j);
    return b.build();
}

} // namespace

std::vector<Graph> enumerate_small_chordal(int n, Exec exec) {
    if (n < 1 || n > 7) throw size_cap_error("enumerate_small_chordal supports 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;

    // survivors of the cheap filters, later deduplicated by canonical code
    std::vector<std::pair<std::uint64_t, std::string>> tagged;
    if (exec == Exec::serial) {
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!g.connected() || !is_chordal(g).chordal) continue;
            tagged.emplace_back(mask, canonical_code(g));
        }
    } else {
        const std::uint64_t block = 1u << 12;
        const std::uint64_t blocks = (total + block - 1) / block;
        std::vector<std::vector<std::pair<std::uint64_t, std::string>>> per_block(blocks);
#pragma omp parallel for schedule(dynamic)
        for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
            std::uint64_t stop = std::min<std::uint64_t>((b + 1) * block, total);
            for (std::uint64_t mask = b * block; mask < stop; ++mask) {
                Graph g = graph_from_mask(n, mask);
                if (!g.connected() || !is_chordal(g).chordal) continue;
                per_block[b].emplace_back(mask, canonical_code(g));
            }
        }
        for (auto& chunk : per_block)
            tagged.insert(tagged.end(), chunk.begin(), chunk.end());
    }

    std::vector<Graph> out;
    std::map<std::string, bool> seen;
    for (auto& [mask, code] : tagged) {
        if (seen.emplace(code, true).second) out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace

Graph random_chordal(int n, int clique_budget, std::uint64_t seed) {
    if (n < 1 || n > 12) throw size_cap_error("random_chordal supports 1 <= n <= 12");
    if (clique_budget < 1 || clique_budget > 16)
        throw graph_error("random_chordal clique budget must be in 1..16");
    SplitMix rng{seed * 0x9e3779b97f4a7c15ULL + 0x1234567};

    // random tree on the clique nodes
    std::vector<std::vector<int>> tree_adj(clique_budget);
    for (int node = 1; node < clique_budget; ++node) {
        int parent = static_cast<int>(rng.below(node));
        tree_adj[node].push_back(parent);
        tree_adj[parent].push_back(node);
    }

    // every vertex occupies a random connected subtree
    std::vector<VertexSet> bag(clique_budget);
    for (int v = 0; v < n; ++v) {
        int size = 1 + static_cast<int>(rng.below(clique_budget));
        int start = static_cast<int>(rng.below(clique_budget));
        std::vector<int> chosen{start};
        std::vector<bool> in(clique_budget, false);
        in[start] = true;
        std::vector<int> frontier;
        auto extend_frontier = [&](int node) {
            for (int adj : tree_adj[node])
                if (!in[adj]) frontier.push_back(adj);
        };
        extend_frontier(start);
        while (static_cast<int>(chosen.size()) < size && !frontier.empty()) {
            int pick = static_cast<int>(rng.below(frontier.size()));
            int node = frontier[pick];
            frontier.erase(frontier.begin() + pick);
            if (in[node]) continue;
            in[node] = true;
            chosen.push_back(node);
            extend_frontier(node);
        }
        for (int node : chosen) bag[node].insert(v);
    }

    GraphBuilder b(n);
    for (const VertexSet& s : bag) b.clique(s);
    Graph g = b.build();
    assert(is_chordal(g).chordal);
    return g;
}

} // namespace chordalkit
