#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chordalkit/asteroidal.hpp"
#include "chordalkit/sun_system.hpp"

namespace chordalkit {

// Witnesses of non-membership. Every certificate re-verifies from scratch
// against the graph before it is reported.

struct InducedCycleCertificate {
    std::vector<int> cycle; // induced, length >= 4
};

struct AsteroidalCertificate {
    std::array<int, 3> triple{};
    // special-connection witnesses per pair (0,1) (0,2) (1,2); empty for a
    // plain interval certificate
    std::vector<SConnection> links;
};

struct OddSunCertificate {
    VertexSet vertices;
    int k = 0;
};

struct BadSunSystemCertificate {
    BadSunSystem witness;
};

struct OracleExhaustionCertificate {
    std::uint64_t trees_examined = 0;
    std::uint64_t valid_trees = 0;
    int max_cliques = 0;
};

using Certificate = std::variant<InducedCycleCertificate, AsteroidalCertificate,
                                 OddSunCertificate, BadSunSystemCertificate,
                                 OracleExhaustionCertificate>;

const char* certificate_kind(const Certificate& c);

// Full re-derivation of the claimed witness from g; never trusts cached
// search state.
bool verify_certificate(const Graph& g, const Certificate& c);

// Deterministic key-value rendering with per-edge justifications for
// auxiliary-graph odd cycles. Uses vertex labels when present.
std::string describe_certificate(const Graph& g, const Certificate& c);

} // namespace chordalkit
