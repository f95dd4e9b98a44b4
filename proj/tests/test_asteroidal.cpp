#include "doctest.h"

#include "chordalkit/asteroidal.hpp"
#include "chordalkit/canonical.hpp"
#include "chordalkit/chordal.hpp"
#include "chordalkit/families.hpp"
#include "chordalkit/tree_oracle.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using namespace testing_oracles;

TEST_CASE("asteroidal sets in the 3-sun") {
    Graph sun = g2();
    CHECK(is_asteroidal_set(sun, VertexSet::of({3, 4, 5})));
    // a non-independent triple is rejected as not asteroidal
    CHECK(!is_asteroidal_set(sun, VertexSet::of({0, 1, 3})));
    CHECK_THROWS_AS(is_asteroidal_set(sun, VertexSet::of({3, 4})), std::invalid_argument);
}

TEST_CASE("asteroidal check fails when a removal separates the rest") {
    // P6: {0,2,4} is independent but N[2] separates 0 from 4
    Graph p6 = path_graph_pn(6);
    CHECK(!is_asteroidal_set(p6, VertexSet::of({0, 2, 4})));
    CHECK(find_asteroidal_triples(p6).empty());
}

TEST_CASE("find_asteroidal_triples is sound and lexicographic") {
    Graph sun = g2();
    auto triples = find_asteroidal_triples(sun);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0] == std::array<int, 3>{3, 4, 5});

    for (const Graph& g : {g1(), g3(), f11_8()}) {
        auto found = find_asteroidal_triples(g);
        CHECK(!found.empty());
        for (auto& t : found) {
            CHECK(g.is_independent_set(VertexSet::of({t[0], t[1], t[2]})));
            CHECK(is_asteroidal_set(g, VertexSet::of({t[0], t[1], t[2]})));
            CHECK(t[0] < t[1]);
            CHECK(t[1] < t[2]);
        }
    }
}

TEST_CASE("interval recognition against the oracle on figure graphs") {
    CHECK(!is_interval(g1()));
    CHECK(!is_interval(g2()));
    CHECK(!is_interval(g3()));
    CHECK(is_interval(path_graph_pn(5)));
    CHECK(is_interval(complete_graph_kn(4)));

    for (const Graph& g : {g1(), g2(), g3(), f11_8(), path_graph_pn(5), k_sun(3)})
        CHECK(is_interval(g) == is_interval_oracle(g));
}

TEST_CASE("f11_4k asteroidal triples live on the rays") {
    Graph g = f11_4k(4); // F11(16)
    const int m = 7;
    for (auto& t : find_asteroidal_triples(g))
        for (int v : t) {
            CHECK(v >= m);
            CHECK(v < 2 * m);
        }
}

TEST_CASE("special connection shapes have the documented sizes") {
    CHECK(s_directed_pointed(1).graph.vertex_count() == 3);
    CHECK(s_directed_pointed(2).graph.vertex_count() == 6);
    CHECK(s_directed_pointed(3).graph.vertex_count() == 8);
    for (int t = 1; t <= 3; ++t) {
        PointedGraph shape = s_directed_pointed(4, t);
        CHECK(shape.graph.vertex_count() == 4 * t + 5);
        // z_0..z_{2t+2} form a clique, each ladder vertex sits on two rungs
        CHECK(shape.graph.is_clique(VertexSet::first_n(2 * t + 3)));
        CHECK(shape.graph.neighbors(shape.u) == VertexSet::of({0, 1}));
        CHECK(shape.graph.neighbors(shape.v) == VertexSet::of({2 * t + 1, 2 * t + 2}));
        for (int k = 1; k <= 2 * t; ++k)
            CHECK(shape.graph.neighbors(2 * t + 3 + k - 1) == VertexSet::of({k, k + 1}));
    }
    CHECK_THROWS_AS(s_directed_pointed(5), graph_error);
    CHECK_THROWS_AS(s_directed_pointed(4, 0), graph_error);
}

TEST_CASE("every special shape is symmetric in its endpoints") {
    for (int type = 1; type <= 3; ++type) {
        PointedGraph s = s_directed_pointed(type);
        CHECK(pointed_isomorphic(s.graph, s.u, s.v, s.graph, s.v, s.u));
    }
    for (int t = 1; t <= 2; ++t) {
        PointedGraph s = s_directed_pointed(4, t);
        CHECK(pointed_isomorphic(s.graph, s.u, s.v, s.graph, s.v, s.u));
    }
}

TEST_CASE("s_connected finds type-1 paths and self-witnesses") {
    Graph p3 = path_graph_pn(3);
    SConnection link = s_connected(p3, 0, 2);
    CHECK(link.connected);
    CHECK(link.family_type == 1);

    // adjacent endpoints with nothing else never match
    Graph k2 = complete_graph_kn(2);
    CHECK(!s_connected(k2, 0, 1).connected);

    for (int type = 2; type <= 3; ++type) {
        PointedGraph shape = s_directed_pointed(type);
        SConnection self = s_connected(shape.graph, shape.u, shape.v);
        CHECK(self.connected);
        CHECK(self.family_type == type);
    }
    PointedGraph ladder = s_directed_pointed(4, 1);
    SConnection self = s_connected(ladder.graph, ladder.u, ladder.v);
    CHECK(self.connected);
    CHECK(self.family_type == 4);
    CHECK(self.t == 1);
}

TEST_CASE("sun_order recognizes exactly the suns") {
    for (int k = 3; k <= 6; ++k) CHECK(sun_order(k_sun(k)) == k);
    CHECK(!sun_order(complete_graph_kn(6)).has_value());
    CHECK(!sun_order(cycle_graph_cn(6)).has_value());
    CHECK(!sun_order(path_graph_pn(6)).has_value());
    CHECK(!sun_order(g3()).has_value());
}

TEST_CASE("odd sun detection") {
    OddSunResult sun3 = contains_induced_odd_sun(g2());
    CHECK(sun3.found);
    CHECK(sun3.k == 3);
    CHECK(sun3.vertices == g2().vertices());

    CHECK(contains_induced_odd_sun(k_sun(5)).found);
    CHECK(!contains_induced_odd_sun(k_sun(4)).found);
    CHECK(!contains_induced_odd_sun(path_graph_pn(6)).found);
    CHECK(!contains_induced_odd_sun(g1()).found);

    // interval graphs never contain suns (suns carry asteroidal triples)
    for (const Graph& g : {path_graph_pn(7), complete_graph_kn(5)})
        CHECK(!contains_induced_odd_sun(g).found);

    // f11_4k contains its odd sun
    CHECK(contains_induced_odd_sun(f11_4k(2)).found);
    CHECK(contains_induced_odd_sun(f11_4k(3)).found);
}

TEST_CASE("odd sun detection agrees with canonical matching on small hosts") {
    // independent route: match induced subsets against generated suns by
    // canonical code (hosts small enough for the exhaustive coder)
    auto canonical_route = [](const Graph& g) {
        for (int k = 3; 2 * k <= g.vertex_count(); k += 2) {
            if (2 * k > canonical_code_max_vertices) break;
            std::string target = canonical_code(k_sun(k));
            const int n = g.vertex_count();
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                VertexSet s(bits);
                if (s.count() != 2 * k) continue;
                if (canonical_code(g.induced(s).graph) == target) return true;
            }
        }
        return false;
    };
    for (const Graph& g : {g1(), g2(), g3(), f11_8(), k_sun(4), k_sun(5), path_graph_pn(8)})
        CHECK(contains_induced_odd_sun(g).found == canonical_route(g));
}

TEST_CASE("odd sun scan: serial and parallel agree") {
    for (const Graph& g : {g3(), f11_8(), f11_4k(3), k_sun(4), k_sun(5)}) {
        OddSunResult serial = contains_induced_odd_sun(g, Exec::serial);
        OddSunResult parallel = contains_induced_odd_sun(g, Exec::parallel);
        CHECK(serial.found == parallel.found);
        CHECK(serial.vertices == parallel.vertices);
        CHECK(serial.k == parallel.k);
    }
}

TEST_CASE("directed path recognition on the figure graphs") {
    CHECK(is_directed_path(g1()));
    CHECK(!is_directed_path(g2()));
    CHECK(!is_directed_path(g3()));
    CHECK(is_directed_path(path_graph_pn(5)));
    CHECK(!is_directed_path(cycle_graph_cn(5)));
}

TEST_CASE("g1's lone asteroidal triple is not S-connected through x,z") {
    Graph g = g1();
    // x=4 y=5 z=6; x-y pair joins through d, x-z has no special connection
    CHECK(s_connected(g, 4, 5).connected);
    CHECK(!s_connected(g, 4, 6).connected);
    CHECK(!find_s_asteroidal_triple(g).has_value());

    auto witness = find_s_asteroidal_triple(g2());
    REQUIRE(witness.has_value());
    CHECK(witness->triple == std::array<int, 3>{3, 4, 5});
    for (const SConnection& link : witness->links) CHECK(link.connected);
}
