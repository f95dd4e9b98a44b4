#include "chordalkit/sun_system.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>

#include "chordalkit/asteroidal.hpp"

namespace chordalkit {

TryFlowerResult try_flower(const Graph& g, VertexSet f) {
    if (f.empty()) throw graph_error("try_flower requires a nonempty vertex set");
    InducedSubgraph sub = g.induced(f);
    CliqueList cliques = maximal_cliques_general(sub.graph);

    TryFlowerResult result;
    std::vector<VertexSet> petal_cliques;
    for (const VertexSet& c : cliques.cliques) {
        VertexSet parent;
        for (int v : c) parent.insert(sub.to_parent[v]);
        petal_cliques.push_back(parent);
    }
    VertexSet core = f;
    for (const VertexSet& p : petal_cliques) core &= p;
    if (core.empty()) {
        int best = -1;
        for (int i = 0; i < static_cast<int>(petal_cliques.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(petal_cliques.size()); ++j) {
                int overlap = (petal_cliques[i] & petal_cliques[j]).count();
                if (best < 0 || overlap < best) {
                    best = overlap;
                    result.reject_a = i;
                    result.reject_b = j;
                }
            }
        return result;
    }
    Flower flower;
    flower.petal_cliques = std::move(petal_cliques);
    flower.core = core;
    for (const VertexSet& p : flower.petal_cliques) flower.petals.push_back(p - core);
    result.flower = std::move(flower);
    return result;
}

RayClass classify_ray(const Graph& host, const Flower& flower, int ray) {
    VertexSet nb = host.neighbors(ray);
    if (nb.subset_of(flower.core)) return {RayKind::intersecting, -1};
    int home = -1;
    for (int i = 0; i < static_cast<int>(flower.petal_cliques.size()); ++i) {
        if (!nb.subset_of(flower.petal_cliques[i])) continue;
        if (home != -1) return {RayKind::other, -1}; // petal not unique
        home = i;
    }
    if (home == -1) return {RayKind::other, -1};
    if ((nb & flower.core).empty()) return {RayKind::other, -1};
    if ((nb & flower.petals[home]).empty()) return {RayKind::other, -1};
    return {RayKind::split, home};
}

namespace {

// Shared checks once the host, the partition, and a concrete flower are
// fixed. `flower` lives in host ids.
SunSystemResult check_sun_system(SunSystem ss, Flower flower) {
    const Graph& host = ss.host;

    // the flower must be a legal decomposition of F
    if (flower.petal_cliques.empty()) return {std::nullopt, "flower has no cliques"};
    VertexSet covered;
    VertexSet common = ss.flower_vertices;
    for (std::size_t i = 0; i < flower.petal_cliques.size(); ++i) {
        VertexSet p = flower.petal_cliques[i];
        if (!p.subset_of(ss.flower_vertices) || !host.is_clique(p))
            return {std::nullopt, "petal " + std::to_string(i) + " is not a clique of F"};
        covered |= p;
        common &= p;
    }
    if (covered != ss.flower_vertices)
        return {std::nullopt, "flower cliques do not cover F"};
    if (common.empty()) return {std::nullopt, "flower cliques have no common core"};
    if (common != flower.core || flower.core.empty())
        return {std::nullopt, "flower core is not the clique intersection"};
    for (std::size_t i = 0; i < flower.petal_cliques.size(); ++i)
        for (std::size_t j = i + 1; j < flower.petal_cliques.size(); ++j)
            if (!incomparable(flower.petal_cliques[i], flower.petal_cliques[j]))
                return {std::nullopt, "petal cliques " + std::to_string(i) + " and " +
                                          std::to_string(j) + " are comparable"};
    ss.flower = std::move(flower);

    if (!host.is_independent_set(ss.rays)) return {std::nullopt, "rays are not independent"};
    if (ss.rays.count() < 3) return {std::nullopt, "fewer than three rays"};

    std::vector<int> ray_list(ss.rays.begin(), ss.rays.end());
    for (std::size_t i = 0; i < ray_list.size(); ++i)
        for (std::size_t j = i + 1; j < ray_list.size(); ++j)
            if (!incomparable(host.neighbors(ray_list[i]), host.neighbors(ray_list[j])))
                return {std::nullopt, "ray neighbourhoods of " + std::to_string(ray_list[i]) +
                                          " and " + std::to_string(ray_list[j]) +
                                          " are comparable"};

    for (int ray : ray_list) {
        RayClass cls = classify_ray(host, ss.flower, ray);
        if (cls.kind == RayKind::other)
            return {std::nullopt,
                    "ray " + std::to_string(ray) + " is neither intersecting nor split"};
        // an intersecting or split ray is simplicial, so N[r] is a maximal clique
        assert(host.is_simplicial(ray));
        ss.ray_class.push_back(cls);
    }

    if (!is_asteroidal_set(host, ss.rays)) return {std::nullopt, "rays are not asteroidal"};
    return {std::move(ss), ""};
}

SunSystem make_host(const Graph& g, VertexSet f, VertexSet r) {
    SunSystem ss;
    VertexSet all = f | r;
    if (all == g.vertices()) {
        ss.host = g;
        ss.to_parent.resize(g.vertex_count());
        std::iota(ss.to_parent.begin(), ss.to_parent.end(), 0);
        ss.flower_vertices = f;
        ss.rays = r;
    } else {
        InducedSubgraph sub = g.induced(all);
        ss.host = std::move(sub.graph);
        ss.to_parent = std::move(sub.to_parent);
        for (int child = 0; child < ss.host.vertex_count(); ++child)
            (f.contains(ss.to_parent[child]) ? ss.flower_vertices : ss.rays).insert(child);
    }
    return ss;
}

} // namespace

SunSystemResult is_sun_system(const Graph& g, VertexSet f, VertexSet r) {
    if (!(f & r).empty()) return {std::nullopt, "F and R are not disjoint"};
    if (!(f | r).subset_of(g.vertices())) return {std::nullopt, "F u R outside the graph"};
    SunSystem ss = make_host(g, f, r);
    if (ss.flower_vertices.empty()) return {std::nullopt, "flower part is empty"};
    TryFlowerResult flower = try_flower(ss.host, ss.flower_vertices);
    if (!flower.flower)
        return {std::nullopt, "flower cliques " + std::to_string(flower.reject_a) + " and " +
                                  std::to_string(flower.reject_b) + " have no common core"};
    return check_sun_system(std::move(ss), std::move(*flower.flower));
}

SunSystemResult is_sun_system_with_flower(const Graph& g, VertexSet f, VertexSet r,
                                          const Flower& flower) {
    if (!(f & r).empty()) return {std::nullopt, "F and R are not disjoint"};
    if (!(f | r).subset_of(g.vertices())) return {std::nullopt, "F u R outside the graph"};
    SunSystem ss = make_host(g, f, r);
    if (ss.flower_vertices.empty()) return {std::nullopt, "flower part is empty"};
    return check_sun_system(std::move(ss), flower);
}

AuxiliaryGraph build_auxiliary_graph(const SunSystem& ss) {
    AuxiliaryGraph aux;
    std::vector<int> rays(ss.rays.begin(), ss.rays.end());
    aux.ray_count = static_cast<int>(rays.size());
    aux.ray_vertex = rays;

    std::vector<int> split_petals;
    for (const RayClass& cls : ss.ray_class)
        if (cls.kind == RayKind::split) split_petals.push_back(cls.petal);
    std::sort(split_petals.begin(), split_petals.end());
    split_petals.erase(std::unique(split_petals.begin(), split_petals.end()),
                       split_petals.end());
    aux.petal_index = split_petals;

    const int total = aux.ray_count + static_cast<int>(split_petals.size());
    GraphBuilder b(total);
    // petal vertices form a clique
    for (std::size_t i = 0; i < split_petals.size(); ++i)
        for (std::size_t j = i + 1; j < split_petals.size(); ++j)
            b.edge(aux.ray_count + static_cast<int>(i), aux.ray_count + static_cast<int>(j));
    // ray-ray edges: neighbourhoods meeting inside the core
    for (int i = 0; i < aux.ray_count; ++i)
        for (int j = i + 1; j < aux.ray_count; ++j) {
            VertexSet shared =
                ss.host.neighbors(rays[i]) & ss.host.neighbors(rays[j]) & ss.flower.core;
            if (!shared.empty()) b.edge(i, j);
        }
    // ray-petal edges: the ray splits on that petal
    for (int i = 0; i < aux.ray_count; ++i) {
        const RayClass& cls = ss.ray_class[i];
        if (cls.kind != RayKind::split) continue;
        auto it = std::find(split_petals.begin(), split_petals.end(), cls.petal);
        int petal_pos = static_cast<int>(it - split_petals.begin());
        b.edge(i, aux.ray_count + petal_pos);
    }
    aux.graph = b.build();
    return aux;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> parent(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int cur = queue[head];
            for (int nxt : g.neighbors(cur)) {
                if (color[nxt] == -1) {
                    color[nxt] = 1 - color[cur];
                    parent[nxt] = cur;
                    queue.push_back(nxt);
                } else if (color[nxt] == color[cur]) {
                    // walk both ends up to their meeting point: odd cycle
                    std::vector<int> left{cur}, right{nxt};
                    VertexSet on_left = VertexSet::single(cur);
                    for (int w = cur; parent[w] != -1; w = parent[w]) {
                        left.push_back(parent[w]);
                        on_left.insert(parent[w]);
                    }
                    int meet = nxt;
                    while (!on_left.contains(meet)) {
                        meet = parent[meet];
                        right.push_back(meet);
                    }
                    // cycle: meet .. cur, then nxt .. back down to meet's child
                    std::vector<int> cycle;
                    for (int w : left) {
                        cycle.push_back(w);
                        if (w == meet) break;
                    }
                    std::reverse(cycle.begin(), cycle.end());
                    for (int w : right)
                        if (w != meet) cycle.push_back(w);
                    assert(cycle.size() % 2 == 1);
                    return {false, cycle};
                }
            }
        }
    }
    return {true, {}};
}

BipartiteCheck is_bipartite(const AuxiliaryGraph& aux) { return is_bipartite(aux.graph); }

namespace {

// Lexicographic order on ascending member lists; the lowest differing
// element decides.
bool lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    std::uint64_t diff = a.bits() ^ b.bits();
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits() & low) != 0;
}

bool size_lex_less(VertexSet a, VertexSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return lex_less(a, b);
}

// Flower with core exactly C built from minimal petals: each split ray's
// petal is C plus its outside-core neighbours (rays merged when one
// neighbourhood swallows another's petal), leftover flower vertices get
// their own petal C u {x}. Returns nothing when no such flower exists.
std::optional<Flower> build_loose_flower(const Graph& host, VertexSet flower_part,
                                         VertexSet rays, VertexSet core) {
    VertexSet outside = flower_part - core;
    if (outside.count() < 2) return std::nullopt; // non-trivial needs two petals
    for (int x : outside)
        if (!core.subset_of(host.neighbors(x))) return std::nullopt; // not coverable

    // classify every ray against the core
    std::vector<int> split;
    for (int r : rays) {
        VertexSet nb = host.neighbors(r);
        if (nb.subset_of(core)) continue; // intersecting
        if ((nb & core).empty()) return std::nullopt;
        if (!host.is_clique(nb | core)) return std::nullopt;
        split.push_back(r);
    }

    // forced grouping: a ray joins a petal that already swallows its
    // neighbourhood; iterate to closure
    std::vector<VertexSet> petals;
    for (int r : split) petals.push_back(core | host.neighbors(r));
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < petals.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < petals.size() && !merged; ++j) {
                if (!petals[i].subset_of(petals[j]) && !petals[j].subset_of(petals[i]))
                    continue;
                petals[i] |= petals[j];
                petals.erase(petals.begin() + j);
                merged = true;
            }
    }
    for (const VertexSet& p : petals)
        if (!host.is_clique(p)) return std::nullopt;

    VertexSet in_petals;
    for (const VertexSet& p : petals) in_petals |= p;
    for (int x : outside - in_petals) petals.push_back(core.with(x));

    // uniqueness of the split petal: no ray's neighbourhood fits two petals
    for (int r : split) {
        int homes = 0;
        for (const VertexSet& p : petals)
            if (host.neighbors(r).subset_of(p)) ++homes;
        if (homes != 1) return std::nullopt;
    }

    Flower flower;
    flower.core = flower_part;
    for (const VertexSet& p : petals) flower.core &= p;
    if (flower.core != core) return std::nullopt; // true core differs; found under its own C
    std::sort(petals.begin(), petals.end());
    flower.petal_cliques = petals;
    for (const VertexSet& p : petals) flower.petals.push_back(p - core);
    return flower;
}

// One candidate host: enumerate ray subsets among the simplicial vertices in
// (size, lex) order; for each, try the canonical flower first and then the
// loose-core route, which only accepts odd cycles on the ray vertices.
std::optional<BadSunSystem> scan_host(const Graph& g, VertexSet host_set) {
    InducedSubgraph sub = g.induced(host_set);
    const Graph& host = sub.graph;
    const int hn = host.vertex_count();
    if (hn < 4) return std::nullopt;
    if (!host.connected()) return std::nullopt;

    std::vector<int> simplicial;
    for (int v = 0; v < hn; ++v)
        if (host.is_simplicial(v) && host.degree(v) > 0) simplicial.push_back(v);
    if (static_cast<int>(simplicial.size()) < 3) return std::nullopt;

    // independent subsets of the simplicial candidates, by (size, lex)
    std::vector<VertexSet> ray_choices;
    const int s = static_cast<int>(simplicial.size());
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s); ++bits) {
        if (std::popcount(bits) < 3) continue;
        VertexSet rays;
        for (int i = 0; i < s; ++i)
            if ((bits >> i) & 1) rays.insert(simplicial[i]);
        if (rays.count() > hn - 1) continue;
        if (!host.is_independent_set(rays)) continue;
        ray_choices.push_back(rays);
    }
    std::sort(ray_choices.begin(), ray_choices.end(), size_lex_less);

    auto deliver = [&](SunSystem system, std::vector<int> odd_cycle) {
        BadSunSystem bad;
        bad.system = std::move(system);
        for (int& p : bad.system.to_parent) p = sub.to_parent[p];
        bad.aux = build_auxiliary_graph(bad.system);
        bad.odd_cycle = std::move(odd_cycle);
        return bad;
    };

    for (VertexSet rays : ray_choices) {
        VertexSet flower_part = host.vertices() - rays;

        // canonical route: the maximal cliques of the flower subgraph. A ray
        // whose neighbourhood swallows the whole core lets other flower
        // cliques hide behind its clique in a tree, which breaks the parity
        // obstruction; such candidates are left to the common-vertex route.
        SunSystemResult canonical = is_sun_system(host, flower_part, rays);
        if (canonical.system && canonical.system->flower.non_trivial()) {
            bool core_swallowed = false;
            for (int r : rays)
                if (canonical.system->flower.core.subset_of(host.neighbors(r)))
                    core_swallowed = true;
            if (!core_swallowed) {
                AuxiliaryGraph aux = build_auxiliary_graph(*canonical.system);
                BipartiteCheck parity = is_bipartite(aux);
                if (!parity.bipartite)
                    return deliver(std::move(*canonical.system), std::move(parity.odd_cycle));
            }
        }

        // loose-core route: a core vertex adjacent to three rays closes a
        // triangle on the ray vertices of the auxiliary graph. Odd ray
        // cycles without such a vertex do not obstruct a clique-path tree
        // (a single hub clique can host every ray), so only this pattern
        // qualifies here.
        std::vector<int> ray_list(rays.begin(), rays.end());
        int hub = -1;
        for (int v : flower_part) {
            if ((host.neighbors(v) & rays).count() >= 3) { hub = v; break; }
        }
        if (hub < 0) continue;

        std::vector<VertexSet> cores;
        for (std::uint64_t bits = flower_part.bits(); bits != 0;
             bits = (bits - 1) & flower_part.bits()) {
            VertexSet c(bits);
            if (c == flower_part || (flower_part - c).count() < 2) continue;
            if (!host.is_clique(c)) continue;
            cores.push_back(c);
        }
        std::sort(cores.begin(), cores.end(), size_lex_less);
        for (VertexSet core : cores) {
            int shared = -1;
            for (int v : core)
                if ((host.neighbors(v) & rays).count() >= 3) { shared = v; break; }
            if (shared < 0) continue;
            std::optional<Flower> flower = build_loose_flower(host, flower_part, rays, core);
            if (!flower) continue;
            SunSystemResult candidate =
                is_sun_system_with_flower(host, flower_part, rays, *flower);
            if (!candidate.system || !candidate.system->flower.non_trivial()) continue;
            // the triangle on the first three rays at the shared vertex
            std::vector<int> cycle;
            for (std::size_t i = 0; i < ray_list.size() && cycle.size() < 3; ++i)
                if (host.adjacent(shared, ray_list[i])) cycle.push_back(static_cast<int>(i));
            return deliver(std::move(*candidate.system), std::move(cycle));
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<BadSunSystem> find_bad_sun_system(const Graph& g, SunSearchOptions opts) {
    const int n = g.vertex_count();
    if (n > opts.max_host_vertices)
        throw size_cap_error("bad-sun-system search capped at " +
                             std::to_string(opts.max_host_vertices) + " vertices");

    // hosts by (size, lex); a sun system needs at least four vertices
    std::vector<std::uint64_t> hosts;
    hosts.reserve(std::uint64_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
        if (std::popcount(bits) >= 4) hosts.push_back(bits);
    std::sort(hosts.begin(), hosts.end(), [](std::uint64_t a, std::uint64_t b) {
        return size_lex_less(VertexSet(a), VertexSet(b));
    });

    if (opts.exec == Exec::serial || hosts.size() < 512) {
        for (std::uint64_t bits : hosts)
            if (auto found = scan_host(g, VertexSet(bits))) return found;
        return std::nullopt;
    }

    const std::size_t block = 256;
    const std::size_t blocks = (hosts.size() + block - 1) / block;
    std::atomic<std::size_t> best{~std::size_t{0}};
    std::vector<std::optional<BadSunSystem>> hit(blocks);
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
        std::size_t start = b * block;
        if (start >= best.load()) continue;
        std::size_t stop = std::min(start + block, hosts.size());
        for (std::size_t i = start; i < stop; ++i) {
            if (auto found = scan_host(g, VertexSet(hosts[i]))) {
                hit[b] = std::move(found);
                std::size_t seen = best.load();
                while (i < seen && !best.compare_exchange_weak(seen, i)) {}
                break;
            }
        }
    }
    std::size_t winner = best.load();
    if (winner == ~std::size_t{0}) return std::nullopt;
    return hit[winner / block];
}

TheoremResult is_path_graph_via_theorem(const Graph& g, SunSearchOptions opts) {
    TheoremResult result;
    ChordalityResult chordality = is_chordal(g);
    if (!chordality.chordal) {
        result.non_chordal_cycle = chordality.induced_cycle;
        return result;
    }
    result.witness = find_bad_sun_system(g, opts);
    result.is_path_graph = !result.witness.has_value();
    return result;
}

bool is_directed_path_via_odd_sun(const Graph& g, SunSearchOptions opts) {
    if (!is_path_graph_via_theorem(g, opts).is_path_graph) return false;
    return !contains_induced_odd_sun(g, opts.exec).found;
}

} // namespace chordalkit
