#pragma once

#include <optional>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

// Maximum-cardinality search order plus, when the reversed order fails the
// perfect-elimination check, the witnessing vertex and missing edge.
struct EliminationOrder {
    std::vector<int> order; // MCS visit order; reverse is a PEO iff chordal
    struct Failure {
        int vertex;               // later neighbours of this vertex are not a clique
        std::pair<int, int> missing_edge;
    };
    std::optional<Failure> failure;

    std::vector<int> peo() const { return {order.rbegin(), order.rend()}; }
};

EliminationOrder mcs_order(const Graph& g);

struct ChordalityResult {
    bool chordal;
    std::vector<int> induced_cycle; // length >= 4 when not chordal
};

// Chordality via MCS + elimination check; on failure recovers an induced
// cycle of length >= 4 and re-verifies it before returning.
ChordalityResult is_chordal(const Graph& g);

struct CliqueList {
    std::vector<VertexSet> cliques;          // each maximal, ascending bitset order
    std::vector<std::vector<int>> by_vertex; // vertex -> indices of containing cliques

    int size() const { return static_cast<int>(cliques.size()); }
};

class non_chordal_error : public graph_error {
public:
    explicit non_chordal_error(std::vector<int> cycle)
        : graph_error("graph is not chordal"), induced_cycle(std::move(cycle)) {}
    std::vector<int> induced_cycle;
};

// Exact maximal cliques of a chordal graph via its elimination order.
// Throws non_chordal_error (carrying the certificate) otherwise.
CliqueList maximal_cliques(const Graph& g);

// Branch-and-bound enumeration for arbitrary graphs; test tooling only.
CliqueList maximal_cliques_general(const Graph& g, int max_n = 20);

struct CliqueTree; // clique_tree.hpp

// One valid clique tree: maximum-weight spanning tree of the clique
// intersection graph, deterministic tie-breaking, validity re-checked.
CliqueTree build_clique_tree(const Graph& g);

} // namespace chordalkit
