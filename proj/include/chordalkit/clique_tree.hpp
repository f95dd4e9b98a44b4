#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chordalkit/chordal.hpp"
#include "chordalkit/graph.hpp"

namespace chordalkit {

// Tree over the maximal cliques of a chordal graph. Node indices refer to
// cliques.cliques; edges are stored with a < b and kept sorted.
struct CliqueTree {
    Graph graph;
    CliqueList cliques;
    std::vector<std::pair<int, int>> edges;

    int node_count() const { return cliques.size(); }
    // Node set {Q : v in Q} as a bitset over node indices.
    VertexSet nodes_containing(int v) const;
    // Tree adjacency restricted to `nodes`.
    std::vector<VertexSet> adjacency() const;
};

struct TreeValidation {
    enum class Status { valid, disconnected_vertex, node_mismatch };
    Status status = Status::valid;
    int vertex = -1; // vertex whose subtree is disconnected

    explicit operator bool() const { return status == Status::valid; }
};

// Checks that the nodes are exactly the maximal cliques and that every T^v
// is connected; reports an offending vertex otherwise.
TreeValidation validate_clique_tree(const CliqueTree& t);

struct PathCheck {
    bool ok = true;
    int vertex = -1; // vertex whose subtree has a node of degree >= 3
};

// Every T^v a path (assumes the tree already validates).
PathCheck is_clique_path_tree(const CliqueTree& t);

struct SubtreeView {
    VertexSet nodes;                        // node indices
    std::vector<std::pair<int, int>> edges; // tree edges inside the view
    std::vector<int> leaves;                // nodes of degree <= 1 in the view
};

// Minimum-size connected subtree whose clique labels cover S; ties broken by
// lexicographically smallest node set. Every leaf of the view intersects S.
SubtreeView steiner_subtree(const CliqueTree& t, VertexSet s);

// Deterministic DOT rendering; node label = sorted vertex names of the clique.
std::string to_dot(const CliqueTree& t);

} // namespace chordalkit
