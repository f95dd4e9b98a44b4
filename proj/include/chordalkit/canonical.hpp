#pragma once

#include <string>

#include "chordalkit/graph.hpp"

namespace chordalkit {

constexpr int canonical_code_max_vertices = 10;

// Canonical byte string: equal for two graphs iff they are isomorphic.
// Colour refinement followed by a permutation search over the refined
// classes; callers cap at n <= 10.
std::string canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Isomorphism of pointed graphs: a bijection mapping ua -> ub and va -> vb.
// Exact backtracking; intended for the small special-connection shapes.
bool pointed_isomorphic(const Graph& a, int ua, int va, const Graph& b, int ub, int vb);

} // namespace chordalkit
