#include "chordalkit/tree_oracle.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace chordalkit {

namespace {

struct SpanningSearch {
    const Graph& g;
    CliqueList cliques;
    std::vector<std::pair<int, int>> edge_pool; // nonempty-intersection pairs, lex order
    int m = 0;

    bool prune_degrees = false;
    bool stop_at_path_tree = false;
    std::uint64_t trees_examined = 0;
    std::uint64_t valid_trees = 0;
    std::function<bool(const std::vector<std::pair<int, int>>&)> on_valid_tree;

    std::vector<std::pair<int, int>> chosen;
    std::array<std::array<std::uint8_t, 64>, 64> degree{}; // [vertex][node]
    bool stopped = false;

    explicit SpanningSearch(const Graph& graph) : g(graph) {
        cliques = maximal_cliques(g);
        m = cliques.size();
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (!(cliques.cliques[a] & cliques.cliques[b]).empty())
                    edge_pool.emplace_back(a, b);
    }

    // Components reachable with already-chosen edges plus the pool suffix.
    bool can_still_span(std::size_t idx, const std::vector<int>& comp) const {
        if (m <= 1) return true;
        std::array<VertexSet, 64> adj{};
        auto link = [&](int a, int b) {
            adj[comp[a]].insert(comp[b]);
            adj[comp[b]].insert(comp[a]);
        };
        for (std::size_t i = idx; i < edge_pool.size(); ++i)
            link(edge_pool[i].first, edge_pool[i].second);
        VertexSet reps;
        for (int q = 0; q < m; ++q) reps.insert(comp[q]);
        VertexSet seen = VertexSet::single(reps.min());
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int r : frontier) next |= adj[r] & reps;
            frontier = next - seen;
            seen |= frontier;
        }
        return seen == reps;
    }

    bool tree_is_valid() const {
        std::array<VertexSet, 64> adj{};
        for (auto [a, b] : chosen) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            VertexSet nodes;
            for (int q : cliques.by_vertex[v]) nodes.insert(q);
            if (nodes.count() <= 1) continue;
            VertexSet comp = VertexSet::single(nodes.min());
            VertexSet frontier = comp;
            while (!frontier.empty()) {
                VertexSet next;
                for (int q : frontier) next |= adj[q] & nodes;
                frontier = next - comp;
                comp |= frontier;
            }
            if (comp != nodes) return false;
        }
        return true;
    }

    bool degrees_path_shaped() const {
        for (auto [a, b] : chosen) {
            for (int v : cliques.cliques[a] & cliques.cliques[b]) {
                if (degree[v][a] >= 3 || degree[v][b] >= 3) return false;
            }
        }
        return true;
    }

    void leaf() {
        ++trees_examined;
        if (!tree_is_valid()) return;
        ++valid_trees;
        if (stop_at_path_tree && !degrees_path_shaped()) return;
        if (on_valid_tree && !on_valid_tree(chosen)) stopped = true;
    }

    void search(std::size_t idx, std::vector<int> comp, int joined) {
        if (stopped) return;
        if (joined == m - 1) {
            leaf();
            return;
        }
        if (idx == edge_pool.size()) return;
        if (!can_still_span(idx, comp)) return;

        auto [a, b] = edge_pool[idx];
        int ra = comp[a], rb = comp[b];
        if (ra != rb) {
            // include
            bool degree_ok = true;
            VertexSet shared = cliques.cliques[a] & cliques.cliques[b];
            if (prune_degrees) {
                for (int v : shared)
                    if (degree[v][a] == 2 || degree[v][b] == 2) { degree_ok = false; break; }
            }
            if (degree_ok) {
                for (int v : shared) {
                    ++degree[v][a];
                    ++degree[v][b];
                }
                chosen.emplace_back(a, b);
                std::vector<int> merged = comp;
                for (int q = 0; q < m; ++q)
                    if (merged[q] == ra) merged[q] = rb;
                search(idx + 1, std::move(merged), joined + 1);
                chosen.pop_back();
                for (int v : shared) {
                    --degree[v][a];
                    --degree[v][b];
                }
                if (stopped) return;
            }
        }
        // exclude
        search(idx + 1, std::move(comp), joined);
    }

    void run() {
        if (m <= 1) {
            leaf();
            return;
        }
        std::vector<int> comp(m);
        for (int q = 0; q < m; ++q) comp[q] = q;
        search(0, std::move(comp), 0);
    }
};

CliqueTree make_tree(const Graph& g, const CliqueList& cliques,
                     std::vector<std::pair<int, int>> edges) {
    CliqueTree t;
    t.graph = g;
    t.cliques = cliques;
    std::sort(edges.begin(), edges.end());
    t.edges = std::move(edges);
    return t;
}

} // namespace

EnumerationResult enumerate_clique_trees(const Graph& g, EnumerationOptions opts) {
    if (!g.connected() && g.vertex_count() > 1)
        throw graph_error("enumerate_clique_trees requires a connected graph");
    EnumerationResult out;
    SpanningSearch search(g);
    if (search.m > opts.max_cliques)
        throw size_cap_error("clique tree enumeration capped at " +
                             std::to_string(opts.max_cliques) + " maximal cliques");
    search.on_valid_tree = [&](const std::vector<std::pair<int, int>>& edges) {
        if (out.trees.size() >= opts.cap) {
            out.truncated = true;
            return false;
        }
        out.trees.push_back(make_tree(g, search.cliques, edges));
        return true;
    };
    search.run();
    return out;
}

void for_each_clique_tree(const Graph& g, int max_cliques,
                          const std::function<bool(const CliqueTree&)>& visit) {
    if (!g.connected() && g.vertex_count() > 1)
        throw graph_error("for_each_clique_tree requires a connected graph");
    SpanningSearch search(g);
    if (search.m > max_cliques)
        throw size_cap_error("clique tree enumeration capped at " +
                             std::to_string(max_cliques) + " maximal cliques");
    search.on_valid_tree = [&](const std::vector<std::pair<int, int>>& edges) {
        return visit(make_tree(g, search.cliques, edges));
    };
    search.run();
}

namespace {

// Single connected component.
PathOracleResult path_oracle_component(const Graph& g, const OracleOptions& opts) {
    PathOracleResult result;
    SpanningSearch search(g);
    if (search.m > opts.max_cliques)
        throw size_cap_error("path oracle capped at " + std::to_string(opts.max_cliques) +
                             " maximal cliques");
    search.prune_degrees = opts.prune;
    search.stop_at_path_tree = true;
    std::optional<std::vector<std::pair<int, int>>> witness_edges;
    search.on_valid_tree = [&](const std::vector<std::pair<int, int>>& edges) {
        witness_edges = edges;
        return false; // first clique-path tree suffices
    };
    search.run();
    result.trees_examined = search.trees_examined;
    result.valid_trees = search.valid_trees;
    if (witness_edges) {
        result.is_path_graph = true;
        result.witness = make_tree(g, search.cliques, *witness_edges);
        PathCheck check = is_clique_path_tree(*result.witness);
        assert(check.ok);
        (void)check;
    }
    return result;
}

} // namespace

PathOracleResult is_path_graph_oracle(const Graph& g, OracleOptions opts) {
    PathOracleResult result;
    ChordalityResult chordality = is_chordal(g);
    if (!chordality.chordal) {
        result.non_chordal_cycle = chordality.induced_cycle;
        return result;
    }
    if (g.vertex_count() == 0) {
        result.is_path_graph = true;
        result.witness = make_tree(g, CliqueList{}, {});
        return result;
    }

    std::vector<VertexSet> comps = g.components_avoiding(VertexSet());
    if (comps.size() == 1) return path_oracle_component(g, opts);

    // Decompose; a disjoint union is a path graph iff each component is.
    // The combined witness chains the per-component trees.
    CliqueList all = maximal_cliques(g);
    std::vector<std::pair<int, int>> edges;
    int previous_root = -1;
    result.is_path_graph = true;
    for (VertexSet comp : comps) {
        InducedSubgraph sub = g.induced(comp);
        PathOracleResult part = path_oracle_component(sub.graph, opts);
        result.trees_examined += part.trees_examined;
        result.valid_trees += part.valid_trees;
        if (!part.is_path_graph) {
            result.is_path_graph = false;
            result.witness.reset();
            return result;
        }
        // map the component tree into the global clique list
        auto global_index = [&](VertexSet child_clique) {
            VertexSet parent_clique;
            for (int v : child_clique) parent_clique.insert(sub.to_parent[v]);
            for (int i = 0; i < all.size(); ++i)
                if (all.cliques[i] == parent_clique) return i;
            throw graph_error("internal error: component clique missing from parent list");
        };
        std::vector<int> map(part.witness->node_count());
        for (int q = 0; q < part.witness->node_count(); ++q)
            map[q] = global_index(part.witness->cliques.cliques[q]);
        for (auto [a, b] : part.witness->edges)
            edges.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
        if (previous_root >= 0)
            edges.emplace_back(std::min(previous_root, map[0]), std::max(previous_root, map[0]));
        previous_root = map[0];
    }
    result.witness = make_tree(g, all, std::move(edges));
    return result;
}

namespace {

bool interval_component(const Graph& g, int max_cliques) {
    CliqueList cliques = maximal_cliques(g);
    const int m = cliques.size();
    if (m > max_cliques)
        throw size_cap_error("interval oracle capped at " + std::to_string(max_cliques) +
                             " maximal cliques");
    if (m <= 1) return true;

    // Place cliques left to right; once a vertex's clique run has closed it
    // may not reappear.
    VertexSet used;
    std::vector<std::uint8_t> state(g.vertex_count(), 0); // 0 unseen, 1 open, 2 closed
    auto backtrack = [&](auto&& self, int placed) -> bool {
        if (placed == m) return true;
        for (int q = 0; q < m; ++q) {
            if (used.contains(q)) continue;
            VertexSet c = cliques.cliques[q];
            bool ok = true;
            for (int v : c)
                if (state[v] == 2) { ok = false; break; }
            if (!ok) continue;
            std::vector<std::pair<int, std::uint8_t>> undo;
            for (int v : c)
                if (state[v] == 0) { undo.emplace_back(v, 0); state[v] = 1; }
            for (int v = 0; v < g.vertex_count(); ++v)
                if (state[v] == 1 && !c.contains(v)) { undo.emplace_back(v, 1); state[v] = 2; }
            used.insert(q);
            if (self(self, placed + 1)) return true;
            used.erase(q);
            for (auto [v, old] : undo) state[v] = old;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

} // namespace

bool is_interval_oracle(const Graph& g, int max_cliques) {
    ChordalityResult chordality = is_chordal(g);
    if (!chordality.chordal) return false;
    if (g.vertex_count() == 0) return true;
    for (VertexSet comp : g.components_avoiding(VertexSet())) {
        InducedSubgraph sub = g.induced(comp);
        if (!interval_component(sub.graph, max_cliques)) return false;
    }
    return true;
}

} // namespace chordalkit
