#include "doctest.h"

#include "chordalkit/chordal.hpp"
#include "chordalkit/clique_tree.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using namespace testing_oracles;

namespace {

Graph three_sun() {
    return Graph::from_edge_list(
        6, {{0, 1}, {0, 2}, {1, 2}, {0, 5}, {2, 5}, {1, 4}, {2, 4}, {3, 0}, {3, 1}});
}

bool verify_cycle_certificate(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    VertexSet seen;
    for (int v : cycle) {
        if (seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

} // namespace

TEST_CASE("mcs produces a valid elimination order on chordal graphs") {
    for (const Graph& g : {complete_graph_kn(3), path_graph_pn(6), three_sun()}) {
        EliminationOrder order = mcs_order(g);
        CHECK(!order.failure);
        CHECK(static_cast<int>(order.order.size()) == g.vertex_count());
    }
    EliminationOrder c4 = mcs_order(cycle_graph_cn(4));
    REQUIRE(c4.failure.has_value());
    auto [v, missing] = *c4.failure;
    Graph g = cycle_graph_cn(4);
    CHECK(g.adjacent(v, missing.first));
    CHECK(g.adjacent(v, missing.second));
    CHECK(!g.adjacent(missing.first, missing.second));
}

TEST_CASE("chordality with certificates") {
    CHECK(is_chordal(complete_graph_kn(3)).chordal);
    CHECK(is_chordal(Graph(0)).chordal);
    CHECK(is_chordal(three_sun()).chordal);

    auto c5 = is_chordal(cycle_graph_cn(5));
    CHECK(!c5.chordal);
    CHECK(c5.induced_cycle.size() == 5);
    CHECK(verify_cycle_certificate(cycle_graph_cn(5), c5.induced_cycle));
}

TEST_CASE("chordality matches brute force on every 5-vertex graph") {
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int k = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++k)
                if ((bits >> k) & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(5, edges);
        auto result = is_chordal(g);
        CHECK(result.chordal == brute_chordal(g));
        if (!result.chordal) CHECK(verify_cycle_certificate(g, result.induced_cycle));
    }
}

TEST_CASE("maximal cliques of the 3-sun") {
    CliqueList cliques = maximal_cliques(three_sun());
    CHECK(cliques.size() == 4);
    CHECK(cliques.cliques == brute_maximal_cliques(three_sun()));
    // every vertex covered, no containments
    for (int v = 0; v < 6; ++v) CHECK(!cliques.by_vertex[v].empty());
}

TEST_CASE("maximal cliques on complete graphs and edge cases") {
    CHECK(maximal_cliques(complete_graph_kn(5)).size() == 1);
    CHECK(maximal_cliques(Graph(0)).size() == 0);
    CHECK(maximal_cliques(Graph(3)).size() == 3); // three isolated vertices
    CHECK_THROWS_AS(maximal_cliques(cycle_graph_cn(4)), non_chordal_error);
    try {
        maximal_cliques(cycle_graph_cn(6));
    } catch (const non_chordal_error& e) {
        CHECK(verify_cycle_certificate(cycle_graph_cn(6), e.induced_cycle));
    }
}

TEST_CASE("maximal cliques match brute force on all chordal 5-vertex graphs") {
    int chordal_count = 0;
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int k = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++k)
                if ((bits >> k) & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(5, edges);
        if (!is_chordal(g).chordal) continue;
        ++chordal_count;
        CliqueList cliques = maximal_cliques(g);
        CHECK(cliques.cliques == brute_maximal_cliques(g));
        CHECK(cliques.size() <= g.vertex_count());
    }
    CHECK(chordal_count > 0);
}

TEST_CASE("general clique enumeration handles non-chordal graphs") {
    CliqueList c5 = maximal_cliques_general(cycle_graph_cn(5));
    CHECK(c5.size() == 5);
    CHECK(c5.cliques == brute_maximal_cliques(cycle_graph_cn(5)));
    CHECK_THROWS_AS(maximal_cliques_general(Graph(21)), graph_error);
}

TEST_CASE("clique tree construction validates") {
    CliqueTree single = build_clique_tree(complete_graph_kn(4));
    CHECK(single.node_count() == 1);
    CHECK(single.edges.empty());

    CliqueTree sun = build_clique_tree(three_sun());
    CHECK(sun.node_count() == 4);
    CHECK(validate_clique_tree(sun));

    // deterministic output
    CliqueTree again = build_clique_tree(three_sun());
    CHECK(again.edges == sun.edges);

    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int k = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j, ++k)
                if ((bits >> k) & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(5, edges);
        if (!is_chordal(g).chordal) continue;
        CHECK(validate_clique_tree(build_clique_tree(g)));
    }
}
