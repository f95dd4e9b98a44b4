#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordalkit/asteroidal.hpp"
#include "chordalkit/clique_tree.hpp"
#include "chordalkit/exec.hpp"
#include "chordalkit/graph.hpp"

namespace chordalkit {

// k-clique core c_0..c_{k-1} plus independent rays r_0..r_{k-1} with
// N(r_i) = {c_i, c_{i+1 mod k}}. Vertices k..2k-1 are the rays.
Graph k_sun(int k);

// The three separating examples: g1 in DirectPath \ Interval, g2 (the 3-sun)
// in Path \ DirectPath, g3 in Chordal \ Path.
Graph g1();
Graph g2();
Graph g3();

// Triangle core {u,v,w}, two nonadjacent vertices joined to the whole core,
// and three rays on the core pairs. Eight vertices, fifteen edges.
Graph f11_8();

// Core clique c_0..c_{2k-2}, rays r_i on {c_i, c_{i+1}} (an odd sun), and
// two extra vertices x, y joined to every core vertex. 4k vertices; k >= 2.
// Vertex layout: core 0..2k-2, rays 2k-1..4k-3, x = 4k-2, y = 4k-1.
Graph f11_4k(int k);

// The four special-connection shapes with distinguished endpoints.
// t is only meaningful for type 4 (t >= 1).
PointedGraph s_directed_pointed(int type, int t = 1);

struct TaResult {
    std::optional<CliqueTree> tree;
    std::string infeasible; // nonempty when no side assignment exists
};

// The clique tree T_A for an asteroidal triple A of f11_4k(k): central
// cliques joined, every ray clique attached to one of them so that rays
// sharing a core vertex in N(A) land on opposite sides. Reports
// infeasibility when those constraints form an odd cycle.
TaResult build_ta(const Graph& f11, std::array<int, 3> triple);

// All connected chordal graphs on n vertices up to isomorphism, n <= 7.
// Deterministic order (first labeled representative in bitmask order).
std::vector<Graph> enumerate_small_chordal(int n, Exec exec = Exec::parallel);

// Union of cliques hung on a random tree with per-vertex connected
// subtrees; chordal by construction, deterministic per seed. n <= 12.
Graph random_chordal(int n, int clique_budget, std::uint64_t seed);

} // namespace chordalkit
