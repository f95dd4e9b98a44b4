#include "chordalkit/asteroidal.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "chordalkit/canonical.hpp"
#include "chordalkit/chordal.hpp"
#include "chordalkit/families.hpp"
#include "combinations.hpp"

namespace chordalkit {

bool is_asteroidal_set(const Graph& g, VertexSet s) {
    if (s.count() < 3)
        throw std::invalid_argument("asteroidal sets need at least three vertices");
    if (!g.is_independent_set(s)) return false;
    for (int v : s) {
        VertexSet rest = s.without(v);
        VertexSet removed = g.closed_neighborhood(v);
        VertexSet comp = g.component_of(rest.min(), g.vertices() - removed);
        if (!rest.subset_of(comp)) return false;
    }
    return true;
}

std::vector<std::array<int, 3>> find_asteroidal_triples(const Graph& g) {
    std::vector<std::array<int, 3>> triples;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                if (is_asteroidal_set(g, VertexSet::of({a, b, c})))
                    triples.push_back({a, b, c});
            }
        }
    return triples;
}

bool is_interval(const Graph& g) {
    return is_chordal(g).chordal && find_asteroidal_triples(g).empty();
}

SpecialFamily::SpecialFamily(int max_vertices) {
    for (int type = 1; type <= 3; ++type) {
        PointedGraph shape = s_directed_pointed(type);
        if (shape.graph.vertex_count() <= max_vertices) members_.push_back(std::move(shape));
    }
    for (int t = 1; 4 * t + 5 <= max_vertices; ++t)
        members_.push_back(s_directed_pointed(4, t));
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> degrees(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

} // namespace

SConnection s_connected(const Graph& g, int u, int v, const SpecialFamily& family) {
    if (u == v) throw std::invalid_argument("s_connected requires distinct vertices");
    const int n = g.vertex_count();
    std::vector<int> pool;
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) pool.push_back(w);

    for (const PointedGraph& shape : family.members()) {
        const int size = shape.graph.vertex_count();
        if (size > n) continue;
        if (g.adjacent(u, v) != shape.graph.adjacent(shape.u, shape.v)) continue;
        std::vector<int> shape_degrees = sorted_degrees(shape.graph);

        SConnection found;
        detail::for_each_combination(
            static_cast<int>(pool.size()), size - 2, [&](const std::vector<int>& idx) {
                VertexSet s = VertexSet::of({u, v});
                for (int i : idx) s.insert(pool[i]);
                InducedSubgraph sub = g.induced(s);
                if (sorted_degrees(sub.graph) != shape_degrees) return true;
                int cu = -1, cv = -1;
                for (int i = 0; i < sub.graph.vertex_count(); ++i) {
                    if (sub.to_parent[i] == u) cu = i;
                    if (sub.to_parent[i] == v) cv = i;
                }
                if (pointed_isomorphic(sub.graph, cu, cv, shape.graph, shape.u, shape.v)) {
                    found.connected = true;
                    found.witness = s;
                    return false;
                }
                return true;
            });
        if (found.connected) {
            // the family shapes are symmetric in u, v, so no orientation pass
            int type = size == 3 ? 1 : size == 6 ? 2 : size == 8 ? 3 : 4;
            found.family_type = type;
            found.t = type == 4 ? (size - 5) / 4 : 0;
            return found;
        }
    }
    return {};
}

SConnection s_connected(const Graph& g, int u, int v) {
    SpecialFamily family(g.vertex_count());
    return s_connected(g, u, v, family);
}

std::optional<SAsteroidalTriple> find_s_asteroidal_triple(const Graph& g) {
    SpecialFamily family(g.vertex_count());
    for (const std::array<int, 3>& triple : find_asteroidal_triples(g)) {
        SAsteroidalTriple result;
        result.triple = triple;
        result.links[0] = s_connected(g, triple[0], triple[1], family);
        if (!result.links[0].connected) continue;
        result.links[1] = s_connected(g, triple[0], triple[2], family);
        if (!result.links[1].connected) continue;
        result.links[2] = s_connected(g, triple[1], triple[2], family);
        if (!result.links[2].connected) continue;
        return result;
    }
    return std::nullopt;
}

std::optional<int> sun_order(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 6 || n % 2 != 0) return std::nullopt;
    const int k = n / 2;
    VertexSet rays, core;
    for (int v = 0; v < n; ++v)
        (h.degree(v) == 2 ? rays : core).insert(v);
    if (rays.count() != k) return std::nullopt;
    if (!h.is_clique(core) || !h.is_independent_set(rays)) return std::nullopt;

    // every ray sits on a core pair; those pairs must tile the core as one cycle
    std::array<int, Graph::max_vertices> pair_degree{};
    for (int r : rays) {
        if (!h.neighbors(r).subset_of(core)) return std::nullopt;
        for (int c : h.neighbors(r)) ++pair_degree[c];
    }
    for (int c : core)
        if (pair_degree[c] != 2) return std::nullopt;
    // connectivity of the pair multigraph on the core
    VertexSet seen;
    VertexSet frontier = VertexSet::single(core.min());
    seen = frontier;
    while (!frontier.empty()) {
        VertexSet next;
        for (int r : rays) {
            VertexSet nb = h.neighbors(r);
            if (!(nb & frontier).empty()) next |= nb;
        }
        frontier = next - seen;
        seen |= frontier;
    }
    if (seen != core) return std::nullopt;
    return k;
}

namespace {

// Scan size-2k subsets for an induced k-sun; lexicographically first hit.
std::optional<VertexSet> odd_sun_scan(const Graph& g, int k, Exec exec) {
    const int n = g.vertex_count();
    const int size = 2 * k;
    const std::uint64_t total = detail::binomial(n, size);

    auto test = [&](const std::vector<int>& idx) -> std::optional<VertexSet> {
        VertexSet s;
        for (int i : idx) s.insert(i);
        if (sun_order(g.induced(s).graph) == k) return s;
        return std::nullopt;
    };

    if (exec == Exec::serial || total < 4096) {
        std::optional<VertexSet> hit;
        detail::for_each_combination(n, size, [&](const std::vector<int>& idx) {
            hit = test(idx);
            return !hit.has_value();
        });
        return hit;
    }

    constexpr std::uint64_t block = 1024;
    const std::uint64_t blocks = (total + block - 1) / block;
    std::atomic<std::uint64_t> best_rank{~std::uint64_t{0}};
    std::vector<std::optional<VertexSet>> block_hit(blocks);
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
        std::uint64_t start = b * block;
        if (start >= best_rank.load()) continue;
        std::vector<int> idx = detail::unrank_combination(n, size, start);
        std::uint64_t stop = std::min(start + block, total);
        for (std::uint64_t rank = start; rank < stop; ++rank) {
            if (auto hit = test(idx)) {
                block_hit[b] = hit;
                std::uint64_t seen = best_rank.load();
                while (rank < seen && !best_rank.compare_exchange_weak(seen, rank)) {}
                break;
            }
            if (!detail::next_combination(idx, n)) break;
        }
    }
    std::uint64_t winner = best_rank.load();
    if (winner == ~std::uint64_t{0}) return std::nullopt;
    return block_hit[winner / block];
}

} // namespace

OddSunResult contains_induced_odd_sun(const Graph& g, Exec exec) {
    const int n = g.vertex_count();
    for (int k = 3; 2 * k <= n; k += 2) {
        if (auto hit = odd_sun_scan(g, k, exec)) return {true, *hit, k};
    }
    return {};
}

bool is_directed_path(const Graph& g) {
    if (!is_chordal(g).chordal) return false;
    return !find_s_asteroidal_triple(g).has_value();
}

} // namespace chordalkit
