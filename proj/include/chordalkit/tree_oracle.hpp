#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "chordalkit/clique_tree.hpp"

namespace chordalkit {

struct EnumerationOptions {
    std::size_t cap = 1u << 20; // max trees materialized
    int max_cliques = 12;
};

struct EnumerationResult {
    std::vector<CliqueTree> trees;
    bool truncated = false;
};

// All valid clique trees of a connected chordal graph: spanning trees of the
// clique intersection graph filtered by per-vertex subtree connectivity.
// Deterministic order (lexicographic in sorted edge lists).
EnumerationResult enumerate_clique_trees(const Graph& g, EnumerationOptions opts = {});

// Visitor form; return false from the visitor to stop early.
void for_each_clique_tree(const Graph& g, int max_cliques,
                          const std::function<bool(const CliqueTree&)>& visit);

struct OracleOptions {
    int max_cliques = 12;
    bool prune = true; // branch-and-bound on partial subtree degrees
};

struct PathOracleResult {
    bool is_path_graph = false;
    std::optional<CliqueTree> witness;  // a clique-path tree when true
    std::uint64_t trees_examined = 0;   // spanning trees reached by the search
    std::uint64_t valid_trees = 0;      // valid clique trees among them
    std::vector<int> non_chordal_cycle; // set when the input is not chordal
};

// Gavril: G is a path graph iff it has a clique-path tree. Exhaustive search
// over clique trees, pruning any partial tree in which some vertex's subtree
// already has a node of degree 3. Disconnected inputs are decomposed.
PathOracleResult is_path_graph_oracle(const Graph& g, OracleOptions opts = {});

// Interval iff the maximal cliques admit a linear order with each vertex's
// cliques consecutive; backtracking over clique orders, cap 10 cliques per
// component.
bool is_interval_oracle(const Graph& g, int max_cliques = 10);

} // namespace chordalkit
