#pragma once

#include <array>
#include <optional>
#include <vector>

#include "chordalkit/exec.hpp"
#include "chordalkit/graph.hpp"

namespace chordalkit {

// S is asteroidal: independent, and for every v in S the rest of S lies in
// one component of G - N[v]. Throws for |S| < 3 (the trivial cases the
// definition excludes); non-independent sets simply fail.
bool is_asteroidal_set(const Graph& g, VertexSet s);

// All asteroidal triples, lexicographically ordered.
std::vector<std::array<int, 3>> find_asteroidal_triples(const Graph& g);

// Lekkerkerker-Boland: chordal and AT-free.
bool is_interval(const Graph& g);

struct PointedGraph {
    Graph graph;
    int u = 0;
    int v = 0;
};

// The four special-connection shapes, instantiated up to a vertex budget.
// Type 4 is a ladder series; its parameter is cut off by the host size.
class SpecialFamily {
public:
    explicit SpecialFamily(int max_vertices);
    const std::vector<PointedGraph>& members() const { return members_; }

private:
    std::vector<PointedGraph> members_;
};

struct SConnection {
    bool connected = false;
    VertexSet witness;   // vertex set of the induced copy
    int family_type = 0; // 1..4
    int t = 0;           // type-4 parameter
};

// u, v are S-connected if some induced subgraph containing them is
// pointed-isomorphic to a family member.
SConnection s_connected(const Graph& g, int u, int v, const SpecialFamily& family);
SConnection s_connected(const Graph& g, int u, int v);

struct SAsteroidalTriple {
    std::array<int, 3> triple{};
    std::array<SConnection, 3> links{}; // (0,1), (0,2), (1,2)
};

// First asteroidal triple whose three pairs are all S-connected.
std::optional<SAsteroidalTriple> find_s_asteroidal_triple(const Graph& g);

// If h is exactly a k-sun, its order k.
std::optional<int> sun_order(const Graph& h);

struct OddSunResult {
    bool found = false;
    VertexSet vertices;
    int k = 0;
};

// Some vertex subset induces a k-sun with k odd >= 3. Deterministic witness:
// smallest k, then lexicographically first subset.
OddSunResult contains_induced_odd_sun(const Graph& g, Exec exec = Exec::parallel);

// Cameron-Hoang-Leveque characterization: chordal with no S-asteroidal triple.
bool is_directed_path(const Graph& g);

} // namespace chordalkit
