#include "doctest.h"

#include "chordalkit/tree_oracle.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using namespace testing_oracles;

namespace {

Graph three_sun() {
    return Graph::from_edge_list(
        6, {{0, 1}, {0, 2}, {1, 2}, {0, 5}, {2, 5}, {1, 4}, {2, 4}, {3, 0}, {3, 1}});
}

// Independent clique-tree validity: BFS connectivity of the containing-node
// set, written against the raw definition.
bool reference_valid(const Graph& g, const CliqueList& cliques,
                     const std::vector<std::pair<int, int>>& edges) {
    const int m = cliques.size();
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> holders;
        for (int q = 0; q < m; ++q)
            if (cliques.cliques[q].contains(v)) holders.push_back(q);
        if (holders.size() <= 1) continue;
        std::vector<bool> in(m, false), seen(m, false);
        for (int q : holders) in[q] = true;
        std::vector<int> stack{holders[0]};
        seen[holders[0]] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int nxt : adj[cur])
                if (in[nxt] && !seen[nxt]) { seen[nxt] = true; stack.push_back(nxt); }
        }
        for (int q : holders)
            if (!seen[q]) return false;
    }
    return true;
}

// All labeled trees on m nodes via Prüfer sequences.
std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int m) {
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (m == 1) {
        trees.push_back({});
        return trees;
    }
    int len = m - 2;
    std::vector<int> seq(len, 0);
    while (true) {
        // decode
        std::vector<int> degree(m, 1);
        for (int x : seq) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> work = seq;
        std::vector<bool> used(m, false);
        for (int x : work) {
            int leaf = -1;
            for (int v = 0; v < m; ++v)
                if (degree[v] == 1 && !used[v]) { leaf = v; break; }
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            used[leaf] = true;
            --degree[x];
        }
        std::vector<int> rest;
        for (int v = 0; v < m; ++v)
            if (!used[v] && degree[v] == 1) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        std::sort(edges.begin(), edges.end());
        trees.push_back(edges);

        int i = len - 1;
        while (i >= 0 && seq[i] == m - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    std::sort(trees.begin(), trees.end());
    trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
    return trees;
}

std::vector<Graph> all_connected_chordal(int n) {
    std::vector<Graph> out;
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if ((bits >> k) & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        if (g.connected() && is_chordal(g).chordal) out.push_back(g);
    }
    return out;
}

} // namespace

TEST_CASE("the 3-sun has exactly one valid clique tree") {
    Graph sun = three_sun();
    EnumerationResult result = enumerate_clique_trees(sun);
    CHECK(!result.truncated);
    REQUIRE(result.trees.size() == 1);

    // independent route: filter all 16 labeled trees on the 4 cliques
    CliqueList cliques = maximal_cliques(sun);
    int valid = 0;
    for (const auto& edges : all_labeled_trees(4))
        if (reference_valid(sun, cliques, edges)) ++valid;
    CHECK(valid == 1);

    // the survivor is the star around the core triangle
    const CliqueTree& tree = result.trees[0];
    int core = -1;
    for (int q = 0; q < tree.node_count(); ++q)
        if (tree.cliques.cliques[q] == VertexSet::of({0, 1, 2})) core = q;
    REQUIRE(core >= 0);
    for (auto [a, b] : tree.edges) CHECK((a == core || b == core));
}

TEST_CASE("enumeration agrees with the labeled-tree filter on small chordal graphs") {
    for (const Graph& g : all_connected_chordal(5)) {
        CliqueList cliques = maximal_cliques(g);
        int expected = 0;
        for (const auto& edges : all_labeled_trees(cliques.size())) {
            // only trees whose edges join intersecting cliques can validate;
            // the reference check rejects the rest anyway
            if (reference_valid(g, cliques, edges)) ++expected;
        }
        EnumerationResult result = enumerate_clique_trees(g);
        CHECK(static_cast<int>(result.trees.size()) == expected);
        for (const CliqueTree& t : result.trees) CHECK(validate_clique_tree(t));
    }
}

TEST_CASE("single clique and degenerate graphs") {
    EnumerationResult k1 = enumerate_clique_trees(Graph(1));
    CHECK(k1.trees.size() == 1);
    CHECK(k1.trees[0].edges.empty());

    EnumerationResult empty = enumerate_clique_trees(Graph(0));
    CHECK(empty.trees.size() == 1);

    CHECK(is_path_graph_oracle(Graph(0)).is_path_graph);
    CHECK(is_path_graph_oracle(Graph(1)).is_path_graph);
    CHECK(is_interval_oracle(Graph(0)));
    CHECK(is_interval_oracle(Graph(1)));
}

TEST_CASE("truncation flag") {
    // claw: three edge-cliques sharing the centre, three valid trees
    Graph claw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(enumerate_clique_trees(claw).trees.size() == 3);
    EnumerationOptions opts;
    opts.cap = 1;
    EnumerationResult result = enumerate_clique_trees(claw, opts);
    CHECK(result.trees.size() == 1);
    CHECK(result.truncated);
}

TEST_CASE("invalid spanning trees are rejected with an offending vertex") {
    Graph sun = three_sun();
    CliqueList cliques = maximal_cliques(sun);
    int found_invalid = 0;
    for (const auto& edges : all_labeled_trees(4)) {
        CliqueTree t;
        t.graph = sun;
        t.cliques = cliques;
        t.edges = edges;
        TreeValidation validation = validate_clique_tree(t);
        if (!validation) {
            ++found_invalid;
            CHECK(validation.status == TreeValidation::Status::disconnected_vertex);
            CHECK(!reference_valid(sun, cliques, edges));
            // the reported vertex really is disconnected
            VertexSet holders = t.nodes_containing(validation.vertex);
            CHECK(holders.count() >= 2);
        } else {
            CHECK(reference_valid(sun, cliques, edges));
        }
    }
    CHECK(found_invalid == 15); // 16 labeled trees, one valid
}

TEST_CASE("path oracle on paths, cycles, and the 3-sun") {
    CHECK(is_path_graph_oracle(path_graph_pn(4)).is_path_graph);
    CHECK(is_path_graph_oracle(three_sun()).is_path_graph);

    PathOracleResult c4 = is_path_graph_oracle(cycle_graph_cn(4));
    CHECK(!c4.is_path_graph);
    CHECK(c4.non_chordal_cycle.size() == 4);

    PathOracleResult sun = is_path_graph_oracle(three_sun());
    REQUIRE(sun.witness.has_value());
    CHECK(validate_clique_tree(*sun.witness));
    CHECK(is_clique_path_tree(*sun.witness).ok);
}

TEST_CASE("pruned oracle agrees with unpruned enumeration on the small corpus") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : all_connected_chordal(n)) {
            OracleOptions pruned;
            OracleOptions full;
            full.prune = false;
            PathOracleResult a = is_path_graph_oracle(g, pruned);
            PathOracleResult b = is_path_graph_oracle(g, full);
            CHECK(a.is_path_graph == b.is_path_graph);
            // and against the definition: some enumerated tree is a path tree
            bool any_path_tree = false;
            for (const CliqueTree& t : enumerate_clique_trees(g).trees)
                if (is_clique_path_tree(t).ok) any_path_tree = true;
            CHECK(a.is_path_graph == any_path_tree);
        }
    }
}

TEST_CASE("oracle hierarchy is monotone: interval implies path") {
    for (const Graph& g : all_connected_chordal(5))
        if (is_interval_oracle(g)) CHECK(is_path_graph_oracle(g).is_path_graph);
}

TEST_CASE("interval oracle basics") {
    CHECK(is_interval_oracle(path_graph_pn(4)));
    CHECK(is_interval_oracle(complete_graph_kn(4)));
    CHECK(!is_interval_oracle(cycle_graph_cn(4)));
    CHECK(!is_interval_oracle(three_sun())); // the 3-sun is not interval

    // K1,3 is interval; the claw's cliques order as a consecutive run
    Graph claw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_interval_oracle(claw));
}

TEST_CASE("disconnected graphs decompose") {
    // two disjoint paths: still a path graph and interval
    Graph two_paths = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    PathOracleResult r = is_path_graph_oracle(two_paths);
    CHECK(r.is_path_graph);
    REQUIRE(r.witness.has_value());
    CHECK(validate_clique_tree(*r.witness));
    CHECK(is_interval_oracle(two_paths));

    CHECK_THROWS_AS(enumerate_clique_trees(two_paths), graph_error);
}

TEST_CASE("steiner subtrees") {
    Graph sun = three_sun();
    CliqueTree tree = enumerate_clique_trees(sun).trees[0];

    SubtreeView inside = steiner_subtree(tree, VertexSet::of({0, 1}));
    CHECK(inside.nodes.count() == 1);

    SubtreeView rays = steiner_subtree(tree, VertexSet::of({3, 4, 5}));
    CHECK(rays.nodes == VertexSet::first_n(4)); // whole star
    CHECK(rays.leaves.size() == 3);

    SubtreeView everything = steiner_subtree(tree, sun.vertices());
    CHECK(everything.nodes == VertexSet::first_n(4));
}

TEST_CASE("dot export is deterministic and complete") {
    Graph sun = three_sun();
    sun.set_labels({"a", "b", "c", "x", "y", "z"});
    CliqueTree tree = build_clique_tree(sun);
    std::string dot = to_dot(tree);
    CHECK(dot == to_dot(tree));
    CHECK(dot.find("graph cliquetree {") == 0);
    CHECK(dot.find("{a,b,c}") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 4 + 3 + 1);
}
