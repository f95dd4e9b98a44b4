#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chordalkit/vertex_set.hpp"

namespace chordalkit {

class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input exceeds a documented enumeration cap.
class size_cap_error : public graph_error {
public:
    using graph_error::graph_error;
};

struct InducedSubgraph;

// Finite simple undirected graph on vertices 0..n-1, n <= 64, stored as one
// adjacency bitset row per vertex. Immutable once built; all queries are
// const and values are freely copyable/shareable across threads.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    VertexSet neighbors(int v) const { return rows_[v]; }
    VertexSet closed_neighborhood(int v) const { return rows_[v].with(v); }
    VertexSet neighborhood(int v, bool closed) const {
        return closed ? closed_neighborhood(v) : neighbors(v);
    }
    int degree(int v) const { return rows_[v].count(); }

    bool is_clique(VertexSet s) const;
    bool is_independent_set(VertexSet s) const;
    // v's neighborhood is a clique
    bool is_simplicial(int v) const { return is_clique(rows_[v]); }

    // Connected components of the subgraph induced on V \ removed,
    // ordered by smallest member.
    std::vector<VertexSet> components_avoiding(VertexSet removed) const;
    bool connected() const;
    // Component of `start` in the subgraph induced on `allowed`.
    VertexSet component_of(int start, VertexSet allowed) const;

    InducedSubgraph induced(VertexSet s) const;

    // Optional external vertex names; empty when unset.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void add_edge(int u, int v);

    int n_ = 0;
    std::array<VertexSet, max_vertices> rows_{};
    std::vector<std::string> labels_;

    friend class GraphBuilder;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new vertex id -> parent vertex id
};

// Construction helper for generators; produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    GraphBuilder& edge(int u, int v);
    GraphBuilder& clique(VertexSet s);
    GraphBuilder& labels(std::vector<std::string> names);
    Graph build();

private:
    Graph g_;
};

} // namespace chordalkit
