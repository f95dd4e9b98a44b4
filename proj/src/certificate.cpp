#include "chordalkit/certificate.hpp"

#include <algorithm>

#include "chordalkit/canonical.hpp"
#include "chordalkit/chordal.hpp"
#include "chordalkit/families.hpp"
#include "chordalkit/tree_oracle.hpp"

namespace chordalkit {

const char* certificate_kind(const Certificate& c) {
    switch (c.index()) {
    case 0: return "induced-cycle";
    case 1: return "asteroidal-triple";
    case 2: return "odd-sun";
    case 3: return "bad-sun-system";
    default: return "oracle-exhaustion";
    }
}

namespace {

bool verify_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    VertexSet seen;
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

bool verify_asteroidal(const Graph& g, const AsteroidalCertificate& cert) {
    auto [a, b, c] = cert.triple;
    if (a < 0 || b <= a || c <= b || c >= g.vertex_count()) return false;
    if (!is_asteroidal_set(g, VertexSet::of({a, b, c}))) return false;
    if (cert.links.empty()) return true;
    if (cert.links.size() != 3) return false;
    std::array<std::pair<int, int>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
    for (int i = 0; i < 3; ++i) {
        const SConnection& link = cert.links[i];
        if (!link.connected) return false;
        auto [u, v] = pairs[i];
        if (!link.witness.contains(u) || !link.witness.contains(v)) return false;
        // the witness subset must induce the declared family shape
        PointedGraph shape = s_directed_pointed(link.family_type,
                                                link.family_type == 4 ? link.t : 1);
        InducedSubgraph sub = g.induced(link.witness);
        int cu = -1, cv = -1;
        for (int w = 0; w < sub.graph.vertex_count(); ++w) {
            if (sub.to_parent[w] == u) cu = w;
            if (sub.to_parent[w] == v) cv = w;
        }
        if (!pointed_isomorphic(sub.graph, cu, cv, shape.graph, shape.u, shape.v))
            return false;
    }
    return true;
}

bool verify_odd_sun(const Graph& g, const OddSunCertificate& cert) {
    if (cert.k < 3 || cert.k % 2 == 0) return false;
    if (!cert.vertices.subset_of(g.vertices())) return false;
    return sun_order(g.induced(cert.vertices).graph) == cert.k;
}

bool verify_bad_sun_system(const Graph& g, const BadSunSystemCertificate& cert) {
    const SunSystem& ss = cert.witness.system;
    const int hn = ss.host.vertex_count();
    if (static_cast<int>(ss.to_parent.size()) != hn) return false;

    // host must be the induced subgraph the mapping claims
    VertexSet parent_set;
    for (int p : ss.to_parent) {
        if (p < 0 || p >= g.vertex_count() || parent_set.contains(p)) return false;
        parent_set.insert(p);
    }
    InducedSubgraph sub = g.induced(parent_set);
    // induced() orders children by ascending parent id; the stored host must
    // match under the same order
    std::vector<int> sorted_parents = ss.to_parent;
    if (!std::is_sorted(sorted_parents.begin(), sorted_parents.end())) return false;
    if (!(sub.graph == ss.host)) return false;

    // re-run the definition checks against the stored flower
    SunSystemResult re =
        is_sun_system_with_flower(ss.host, ss.flower_vertices, ss.rays, ss.flower);
    if (!re.system) return false;
    if (!re.system->flower.non_trivial()) return false;

    // rebuild the auxiliary graph and re-check the cycle edge by edge
    AuxiliaryGraph aux = build_auxiliary_graph(*re.system);
    if (!(aux.graph == cert.witness.aux.graph)) return false;
    const std::vector<int>& cycle = cert.witness.odd_cycle;
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    VertexSet seen;
    for (int v : cycle) {
        if (v < 0 || v >= aux.graph.vertex_count() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!aux.graph.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;

    // the parity obstruction is only binding when no ray swallows the core;
    // the exception is a ray triangle through one shared core vertex, which
    // obstructs on its own
    bool core_swallowed = false;
    for (int r : re.system->rays)
        if (re.system->flower.core.subset_of(ss.host.neighbors(r))) core_swallowed = true;
    if (!core_swallowed) return true;
    if (cycle.size() != 3) return false;
    VertexSet shared = re.system->flower.core;
    for (int a : cycle) {
        if (a >= aux.ray_count) return false;
        shared &= ss.host.neighbors(aux.ray_vertex[a]);
    }
    return !shared.empty();
}

bool verify_oracle_exhaustion(const Graph& g, const OracleExhaustionCertificate& cert) {
    OracleOptions opts;
    opts.max_cliques = cert.max_cliques;
    PathOracleResult result = is_path_graph_oracle(g, opts);
    return !result.is_path_graph && result.trees_examined == cert.trees_examined &&
           result.valid_trees == cert.valid_trees;
}

} // namespace

bool verify_certificate(const Graph& g, const Certificate& c) {
    return std::visit(
        [&](const auto& cert) -> bool {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, InducedCycleCertificate>)
                return verify_induced_cycle(g, cert.cycle);
            else if constexpr (std::is_same_v<T, AsteroidalCertificate>)
                return verify_asteroidal(g, cert);
            else if constexpr (std::is_same_v<T, OddSunCertificate>)
                return verify_odd_sun(g, cert);
            else if constexpr (std::is_same_v<T, BadSunSystemCertificate>)
                return verify_bad_sun_system(g, cert);
            else
                return verify_oracle_exhaustion(g, cert);
        },
        c);
}

namespace {

std::string name_list(const Graph& g, const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += g.label(vs[i]);
    }
    return out + "}";
}

std::string name_set(const Graph& g, VertexSet s) {
    return name_list(g, std::vector<int>(s.begin(), s.end()));
}

} // namespace

std::string describe_certificate(const Graph& g, const Certificate& c) {
    std::string out = std::string("certificate = ") + certificate_kind(c) + "\n";
    if (const auto* cyc = std::get_if<InducedCycleCertificate>(&c)) {
        out += "cycle = " + name_list(g, cyc->cycle) + "\n";
        out += "length = " + std::to_string(cyc->cycle.size()) + "\n";
    } else if (const auto* at = std::get_if<AsteroidalCertificate>(&c)) {
        out += "triple = " +
               name_list(g, {at->triple[0], at->triple[1], at->triple[2]}) + "\n";
        static constexpr const char* pair_names[3] = {"(1,2)", "(1,3)", "(2,3)"};
        for (std::size_t i = 0; i < at->links.size(); ++i) {
            const SConnection& link = at->links[i];
            out += std::string("connection") + pair_names[i] + " = type " +
                   std::to_string(link.family_type);
            if (link.family_type == 4) out += " t=" + std::to_string(link.t);
            out += " on " + name_set(g, link.witness) + "\n";
        }
    } else if (const auto* sun = std::get_if<OddSunCertificate>(&c)) {
        out += "k = " + std::to_string(sun->k) + "\n";
        out += "vertices = " + name_set(g, sun->vertices) + "\n";
    } else if (const auto* bad = std::get_if<BadSunSystemCertificate>(&c)) {
        const SunSystem& ss = bad->witness.system;
        auto parent_name = [&](int host_id) { return g.label(ss.to_parent[host_id]); };
        auto host_set = [&](VertexSet s) {
            std::string r = "{";
            bool first = true;
            for (int v : s) {
                if (!first) r += ",";
                r += parent_name(v);
                first = false;
            }
            return r + "}";
        };
        out += "host = " + host_set(ss.host.vertices()) + "\n";
        out += "flower = " + host_set(ss.flower_vertices) + "\n";
        out += "rays = " + host_set(ss.rays) + "\n";
        out += "core = " + host_set(ss.flower.core) + "\n";
        for (std::size_t i = 0; i < ss.flower.petal_cliques.size(); ++i)
            out += "petal[" + std::to_string(i) + "] = " +
                   host_set(ss.flower.petal_cliques[i]) + "\n";
        std::vector<int> rays(ss.rays.begin(), ss.rays.end());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const RayClass& cls = ss.ray_class[i];
            out += "ray " + parent_name(rays[i]) + " = ";
            out += cls.kind == RayKind::intersecting
                       ? std::string("intersecting")
                       : "split on petal[" + std::to_string(cls.petal) + "]";
            out += ", N = " + host_set(ss.host.neighbors(rays[i])) + "\n";
        }
        const AuxiliaryGraph& aux = bad->witness.aux;
        auto aux_name = [&](int a) {
            return a < aux.ray_count
                       ? "ray " + parent_name(aux.ray_vertex[a])
                       : "petal[" + std::to_string(aux.petal_index[a - aux.ray_count]) + "]";
        };
        const std::vector<int>& cycle = bad->witness.odd_cycle;
        out += "odd cycle length = " + std::to_string(cycle.size()) + "\n";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            out += "edge " + aux_name(a) + " -- " + aux_name(b) + ": ";
            if (a >= aux.ray_count && b >= aux.ray_count) {
                out += "petal vertices are pairwise adjacent";
            } else if (a < aux.ray_count && b < aux.ray_count) {
                VertexSet shared = ss.host.neighbors(aux.ray_vertex[a]) &
                                   ss.host.neighbors(aux.ray_vertex[b]) & ss.flower.core;
                out += "neighbourhoods meet the core at " + host_set(shared);
            } else {
                int ray = a < aux.ray_count ? a : b;
                out += "ray " + parent_name(aux.ray_vertex[ray]) + " splits on that petal";
            }
            out += "\n";
        }
    } else if (const auto* ex = std::get_if<OracleExhaustionCertificate>(&c)) {
        out += "spanning trees examined = " + std::to_string(ex->trees_examined) + "\n";
        out += "valid clique trees = " + std::to_string(ex->valid_trees) + "\n";
        out += "no clique-path tree exists\n";
    }
    return out;
}

} // namespace chordalkit
