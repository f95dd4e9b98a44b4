#include "chordalkit/graph.hpp"

#include <algorithm>

namespace chordalkit {

std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw graph_error("vertex count " + std::to_string(n) + " outside [0,64]");
}

void Graph::add_edge(int u, int v) {
    rows_[u].insert(v);
    rows_[v].insert(u);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw graph_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw graph_error("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += rows_[v].count();
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : rows_[u] - VertexSet::first_n(u + 1))
            out.emplace_back(u, v);
    return out;
}

bool Graph::is_clique(VertexSet s) const {
    for (int v : s)
        if (!s.without(v).subset_of(rows_[v])) return false;
    return true;
}

bool Graph::is_independent_set(VertexSet s) const {
    for (int v : s)
        if (!(rows_[v] & s).empty()) return false;
    return true;
}

VertexSet Graph::component_of(int start, VertexSet allowed) const {
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= rows_[v] & allowed;
        frontier = next - comp;
        comp |= frontier;
    }
    return comp;
}

std::vector<VertexSet> Graph::components_avoiding(VertexSet removed) const {
    std::vector<VertexSet> comps;
    VertexSet remaining = vertices() - removed;
    while (!remaining.empty()) {
        VertexSet comp = component_of(remaining.min(), remaining);
        comps.push_back(comp);
        remaining -= comp;
    }
    return comps;
}

bool Graph::connected() const {
    return n_ <= 1 || components_avoiding(VertexSet()).size() == 1;
}

InducedSubgraph Graph::induced(VertexSet s) const {
    InducedSubgraph out;
    out.to_parent.reserve(s.count());
    std::array<int, max_vertices> to_child{};
    for (int v : s) {
        to_child[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    Graph g(static_cast<int>(out.to_parent.size()));
    for (int v : s)
        for (int u : rows_[v] & s)
            if (u > v) g.add_edge(to_child[v], to_child[u]);
    if (!labels_.empty()) {
        std::vector<std::string> names;
        names.reserve(out.to_parent.size());
        for (int v : s) names.push_back(labels_[v]);
        g.set_labels(std::move(names));
    }
    out.graph = std::move(g);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw graph_error("label count does not match vertex count");
    labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder& GraphBuilder::edge(int u, int v) {
    if (u < 0 || u >= g_.vertex_count() || v < 0 || v >= g_.vertex_count() || u == v)
        throw graph_error("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g_.add_edge(u, v);
    return *this;
}

GraphBuilder& GraphBuilder::clique(VertexSet s) {
    for (int u : s)
        for (int v : s)
            if (u < v) edge(u, v);
    return *this;
}

GraphBuilder& GraphBuilder::labels(std::vector<std::string> names) {
    g_.set_labels(std::move(names));
    return *this;
}

Graph GraphBuilder::build() { return g_; }

} // namespace chordalkit
