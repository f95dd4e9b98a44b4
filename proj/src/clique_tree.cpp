#include "chordalkit/clique_tree.hpp"

#include <algorithm>

namespace chordalkit {

VertexSet CliqueTree::nodes_containing(int v) const {
    VertexSet nodes;
    for (int i : cliques.by_vertex[v]) nodes.insert(i);
    return nodes;
}

std::vector<VertexSet> CliqueTree::adjacency() const {
    std::vector<VertexSet> adj(node_count());
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return adj;
}

namespace {

// Connectivity of `nodes` under the tree adjacency.
bool nodes_connected(const std::vector<VertexSet>& adj, VertexSet nodes) {
    if (nodes.count() <= 1) return true;
    VertexSet comp = VertexSet::single(nodes.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= adj[v] & nodes;
        frontier = next - comp;
        comp |= frontier;
    }
    return comp == nodes;
}

} // namespace

TreeValidation validate_clique_tree(const CliqueTree& t) {
    CliqueList expected = maximal_cliques(t.graph);
    if (expected.cliques != t.cliques.cliques)
        return {TreeValidation::Status::node_mismatch, -1};
    const int m = t.node_count();
    if (static_cast<int>(t.edges.size()) != std::max(0, m - 1))
        return {TreeValidation::Status::node_mismatch, -1};
    std::vector<VertexSet> adj = t.adjacency();
    if (!nodes_connected(adj, VertexSet::first_n(m)))
        return {TreeValidation::Status::node_mismatch, -1};
    for (int v = 0; v < t.graph.vertex_count(); ++v)
        if (!nodes_connected(adj, t.nodes_containing(v)))
            return {TreeValidation::Status::disconnected_vertex, v};
    return {};
}

PathCheck is_clique_path_tree(const CliqueTree& t) {
    std::vector<VertexSet> adj = t.adjacency();
    for (int v = 0; v < t.graph.vertex_count(); ++v) {
        VertexSet nodes = t.nodes_containing(v);
        for (int q : nodes)
            if ((adj[q] & nodes).count() >= 3) return {false, v};
    }
    return {};
}

SubtreeView steiner_subtree(const CliqueTree& t, VertexSet s) {
    if (s.empty()) throw graph_error("steiner_subtree requires a nonempty vertex set");
    const int m = t.node_count();
    if (m > 20) throw graph_error("steiner_subtree capped at 20 tree nodes");
    std::vector<VertexSet> adj = t.adjacency();
    auto covers = [&](VertexSet nodes) {
        VertexSet covered;
        for (int q : nodes) covered |= t.cliques.cliques[q];
        return s.subset_of(covered);
    };

    // Subsets of nodes in (size, lexicographic) order; the first connected
    // covering subset is the minimum subtree. Node counts stay small.
    std::vector<std::uint64_t> by_size;
    by_size.reserve(std::uint64_t{1} << m);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits)
        by_size.push_back(bits);
    std::stable_sort(by_size.begin(), by_size.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                    : a < b;
    });
    for (std::uint64_t bits : by_size) {
        VertexSet nodes(bits);
        if (!covers(nodes) || !nodes_connected(adj, nodes)) continue;
        SubtreeView view;
        view.nodes = nodes;
        for (auto [a, b] : t.edges)
            if (nodes.contains(a) && nodes.contains(b)) view.edges.emplace_back(a, b);
        for (int q : nodes) {
            int deg = (adj[q] & nodes).count();
            if (deg <= 1) view.leaves.push_back(q);
        }
        return view;
    }
    throw graph_error("steiner_subtree: set not covered by any subtree");
}

std::string to_dot(const CliqueTree& t) {
    std::string out = "graph cliquetree {\n";
    for (int q = 0; q < t.node_count(); ++q) {
        std::vector<std::string> names;
        for (int v : t.cliques.cliques[q]) names.push_back(t.graph.label(v));
        std::sort(names.begin(), names.end());
        std::string label;
        for (const std::string& name : names) {
            if (!label.empty()) label += ",";
            label += name;
        }
        out += "  q" + std::to_string(q) + " [label=\"{" + label + "}\"];\n";
    }
    for (auto [a, b] : t.edges)
        out += "  q" + std::to_string(a) + " -- q" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace chordalkit
