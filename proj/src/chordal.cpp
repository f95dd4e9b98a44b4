#include "chordalkit/chordal.hpp"

#include <algorithm>
#include <cassert>

#include "chordalkit/clique_tree.hpp"

namespace chordalkit {

EliminationOrder mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    EliminationOrder result;
    result.order.reserve(n);
    std::vector<int> weight(n, 0);
    VertexSet unvisited = g.vertices();
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v : unvisited)
            if (best < 0 || weight[v] > weight[best]) best = v;
        result.order.push_back(best);
        unvisited.erase(best);
        for (int u : g.neighbors(best) & unvisited) ++weight[u];
    }

    // Elimination check on the reversed order: the later neighbours of each
    // vertex must form a clique; it suffices to check against the earliest
    // later neighbour.
    std::vector<int> position(n);
    auto peo = result.peo();
    for (int i = 0; i < n; ++i) position[peo[i]] = i;
    for (int i = 0; i < n && !result.failure; ++i) {
        const int v = peo[i];
        VertexSet later;
        for (int u : g.neighbors(v))
            if (position[u] > i) later.insert(u);
        if (later.empty()) continue;
        int parent = -1;
        for (int u : later)
            if (parent < 0 || position[u] < position[parent]) parent = u;
        for (int u : later)
            if (u != parent && !g.adjacent(parent, u)) {
                result.failure = EliminationOrder::Failure{v, {parent, u}};
                break;
            }
    }
    return result;
}

namespace {

// Shortest path from a to b through vertices nonadjacent to v (plus a, b);
// together with v this closes an induced cycle of length >= 4.
std::vector<int> chordless_cycle_through(const Graph& g, int v, int a, int b) {
    VertexSet allowed = (g.vertices() - g.closed_neighborhood(v)).with(a).with(b);
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<int> queue{a};
    VertexSet seen = VertexSet::single(a);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int cur = queue[head];
        if (cur == b) break;
        for (int nxt : g.neighbors(cur) & (allowed - seen)) {
            parent[nxt] = cur;
            seen.insert(nxt);
            queue.push_back(nxt);
        }
    }
    if (!seen.contains(b)) return {};
    std::vector<int> path;
    for (int cur = b; cur != -1; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    path.push_back(v);
    return path; // cycle a ... b v
}

bool verify_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
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

ChordalityResult is_chordal(const Graph& g) {
    EliminationOrder order = mcs_order(g);
    if (!order.failure) return {true, {}};

    // First try the failing triple from the elimination check, then fall
    // back to scanning all (v, a, b) with a, b nonadjacent neighbours of v.
    auto attempt = [&](int v, int a, int b) -> std::vector<int> {
        std::vector<int> cycle = chordless_cycle_through(g, v, a, b);
        if (!cycle.empty() && verify_induced_cycle(g, cycle)) return cycle;
        return {};
    };
    auto [fv, edge] = *order.failure;
    std::vector<int> cycle = attempt(fv, edge.first, edge.second);
    if (!cycle.empty()) return {false, cycle};
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int a : g.neighbors(v))
            for (int b : g.neighbors(v) - VertexSet::first_n(a + 1)) {
                if (g.adjacent(a, b)) continue;
                cycle = attempt(v, a, b);
                if (!cycle.empty()) return {false, cycle};
            }
    assert(false && "elimination check failed but no induced cycle found");
    return {true, {}};
}

namespace {

CliqueList finalize(std::vector<VertexSet> cliques, int n) {
    std::sort(cliques.begin(), cliques.end());
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
    // drop cliques contained in another
    std::vector<VertexSet> maximal;
    for (VertexSet c : cliques) {
        bool dominated = false;
        for (VertexSet d : cliques)
            if (c != d && c.subset_of(d)) { dominated = true; break; }
        if (!dominated) maximal.push_back(c);
    }
    CliqueList out;
    out.cliques = std::move(maximal);
    out.by_vertex.assign(n, {});
    for (int i = 0; i < out.size(); ++i)
        for (int v : out.cliques[i]) out.by_vertex[v].push_back(i);
    return out;
}

} // namespace

CliqueList maximal_cliques(const Graph& g) {
    ChordalityResult chordality = is_chordal(g);
    if (!chordality.chordal) throw non_chordal_error(chordality.induced_cycle);

    const int n = g.vertex_count();
    EliminationOrder order = mcs_order(g);
    std::vector<int> peo = order.peo();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[peo[i]] = i;
    std::vector<VertexSet> candidates;
    candidates.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int v = peo[i];
        VertexSet c = VertexSet::single(v);
        for (int u : g.neighbors(v))
            if (position[u] > i) c.insert(u);
        candidates.push_back(c);
    }
    return finalize(std::move(candidates), n);
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int v : p | x) {
        int gain = (g.neighbors(v) & p).count();
        if (gain > best) { best = gain; pivot = v; }
    }
    for (int v : p - g.neighbors(pivot)) {
        bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    }
}

} // namespace

CliqueList maximal_cliques_general(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n)
        throw graph_error("maximal_cliques_general capped at " + std::to_string(max_n) +
                          " vertices");
    std::vector<VertexSet> cliques;
    if (g.vertex_count() > 0)
        bron_kerbosch(g, VertexSet(), g.vertices(), VertexSet(), cliques);
    return finalize(std::move(cliques), g.vertex_count());
}

CliqueTree build_clique_tree(const Graph& g) {
    CliqueTree t;
    t.graph = g;
    t.cliques = maximal_cliques(g);
    const int m = t.cliques.size();

    // Kruskal on the clique intersection graph, heaviest first, ties broken
    // by smallest (i, j); zero-weight edges only join distinct components of
    // a disconnected graph.
    struct Candidate { int weight, a, b; };
    std::vector<Candidate> candidates;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            candidates.push_back({(t.cliques.cliques[a] & t.cliques.cliques[b]).count(), a, b});
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });

    std::vector<int> comp(m);
    for (int i = 0; i < m; ++i) comp[i] = i;
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (const Candidate& c : candidates) {
        int ra = find(c.a), rb = find(c.b);
        if (ra == rb) continue;
        comp[ra] = rb;
        t.edges.emplace_back(c.a, c.b);
    }
    std::sort(t.edges.begin(), t.edges.end());

    if (!validate_clique_tree(t))
        throw graph_error("internal error: constructed clique tree failed validation");
    return t;
}

} // namespace chordalkit
