#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordalkit/chordal.hpp"
#include "chordalkit/exec.hpp"
#include "chordalkit/graph.hpp"

namespace chordalkit {

// Cliques with a nonempty common core. Petal cliques are always the maximal
// cliques of the flower subgraph, which makes the decomposition canonical
// and pairwise incomparability automatic.
struct Flower {
    std::vector<VertexSet> petal_cliques;
    VertexSet core;                 // intersection of all petal cliques
    std::vector<VertexSet> petals;  // petal_cliques[i] minus the core

    bool non_trivial() const { return petal_cliques.size() > 1; }
};

struct TryFlowerResult {
    std::optional<Flower> flower;
    // when rejected: the pair of petal cliques with smallest intersection
    int reject_a = -1;
    int reject_b = -1;
};

// Accept F iff the maximal cliques of G[F] share a common vertex. The Helly
// property then holds for free: every subfamily intersection contains the core.
TryFlowerResult try_flower(const Graph& g, VertexSet f);

enum class RayKind { intersecting, split, other };

struct RayClass {
    RayKind kind = RayKind::other;
    int petal = -1; // petal clique index for split rays
};

// Intersecting: N(r) inside the core. Split: N(r) inside exactly one petal
// clique, meeting both the core and the petal-exclusive part. Anything else
// is `other` and disqualifies the candidate.
RayClass classify_ray(const Graph& host, const Flower& flower, int ray);

struct SunSystem {
    Graph host;                      // the induced sun-system graph
    std::vector<int> to_parent;      // host vertex -> vertex of the searched graph
    VertexSet flower_vertices;       // host ids
    VertexSet rays;                  // host ids
    Flower flower;
    std::vector<RayClass> ray_class; // by ray, ascending host id
};

struct SunSystemResult {
    std::optional<SunSystem> system;
    std::string rejection; // first failed invariant when empty
};

// Validate the partition V = F u R as a sun system of G (or of the induced
// host when F u R is a proper subset), decomposing the flower part into its
// maximal cliques. Rejection is a value, not an error.
SunSystemResult is_sun_system(const Graph& g, VertexSet f, VertexSet r);

// Same checks against an explicitly chosen flower over F: petal cliques must
// cover F, form an antichain, and intersect in exactly the flower's core.
SunSystemResult is_sun_system_with_flower(const Graph& g, VertexSet f, VertexSet r,
                                          const Flower& flower);

// One vertex per ray, one per split petal; petal vertices form a clique,
// rays are joined when their neighbourhoods meet inside the core, and a ray
// is joined to the petal it splits.
struct AuxiliaryGraph {
    Graph graph;
    int ray_count = 0;
    std::vector<int> ray_vertex;  // aux id -> host ray vertex
    std::vector<int> petal_index; // aux id - ray_count -> petal clique index
};

AuxiliaryGraph build_auxiliary_graph(const SunSystem& ss);

struct BipartiteCheck {
    bool bipartite = true;
    std::vector<int> odd_cycle;
};

BipartiteCheck is_bipartite(const Graph& g);
BipartiteCheck is_bipartite(const AuxiliaryGraph& aux);

struct BadSunSystem {
    SunSystem system;           // to_parent maps into the searched graph
    AuxiliaryGraph aux;
    std::vector<int> odd_cycle; // aux vertex ids
};

struct SunSearchOptions {
    int max_host_vertices = 12;
    Exec exec = Exec::parallel;
};

// Exhaustive scan over induced hosts H (by size, then lexicographically) and
// ray subsets drawn from the simplicial vertices of H: the first non-trivial
// sun system whose auxiliary graph is non-bipartite.
std::optional<BadSunSystem> find_bad_sun_system(const Graph& g, SunSearchOptions opts = {});

struct TheoremResult {
    bool is_path_graph = false;
    std::optional<BadSunSystem> witness;
    std::vector<int> non_chordal_cycle;
};

// The sun-system characterization: chordal and free of bad sun systems.
TheoremResult is_path_graph_via_theorem(const Graph& g, SunSearchOptions opts = {});

// Chaplick et al.: directed path = path without an induced odd sun.
bool is_directed_path_via_odd_sun(const Graph& g, SunSearchOptions opts = {});

} // namespace chordalkit
