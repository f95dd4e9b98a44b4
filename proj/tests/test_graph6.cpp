#include "doctest.h"

#include "chordalkit/graph6.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using namespace testing_oracles;

namespace {

// Independent decoder: expand every data byte into six bits, then walk the
// column-major pair order over the flat bit list.
Graph reference_decode(const std::string& s) {
    std::size_t pos = 0;
    int n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    std::vector<int> bits;
    for (std::size_t i = pos; i < s.size(); ++i) {
        int b = s[i] - 63;
        for (int k = 5; k >= 0; --k) bits.push_back((b >> k) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if (bits.at(idx)) edges.emplace_back(row, col);
    return Graph::from_edge_list(n, edges);
}

struct Lcg {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
};

Graph random_graph(Lcg& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next() & 1) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

} // namespace

TEST_CASE("graph6 decodes the documented example") {
    Graph g = from_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    // hand decoding: '?' clears the first six pairs, '{' = 111100 sets
    // (0,4) (1,4) (2,4) (3,4) -- the star on centre 4
    for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
    CHECK(!g.adjacent(0, 1));
    CHECK(g == reference_decode("D?{"));
}

TEST_CASE("graph6 encodes K1") {
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round trip on random graphs") {
    Lcg rng{20240817};
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.next() % 11);
        Graph g = random_graph(rng, n);
        std::string enc = to_graph6(g);
        CHECK(from_graph6(enc) == g);
        CHECK(reference_decode(enc) == g);
    }
}

TEST_CASE("graph6 long header for n = 63 and 64") {
    for (int n : {63, 64}) {
        Lcg rng{static_cast<std::uint64_t>(n)};
        Graph g = random_graph(rng, n);
        std::string enc = to_graph6(g);
        CHECK(enc[0] == '~');
        CHECK(from_graph6(enc) == g);
    }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(from_graph6(""), parse_error);

    try {
        from_graph6("D?"); // needs two data bytes
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset == 2);
    }

    try {
        from_graph6("D?{?"); // one byte too many
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.byte_offset == 3);
    }

    CHECK_THROWS_AS(from_graph6("D\x1f{"), parse_error); // byte below offset range
    CHECK_THROWS_AS(from_graph6("~~~~~"), parse_error);  // oversized long form
    CHECK_THROWS_AS(from_graph6("~??B"), parse_error);   // long-form n=3, data missing
}

TEST_CASE("edge-list text round trip") {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    std::string text = to_edge_list_text(g);
    CHECK(text == "n 4\n0 1\n1 2\n2 3\n");
    CHECK(from_edge_list_text(text) == g);
}

TEST_CASE("edge-list text with names and comments") {
    std::string text =
        "# a triangle plus a pendant\n"
        "n 4\n"
        "a b\n"
        "b c\n"
        "c a   # closing edge\n"
        "c tail\n";
    Graph g = from_edge_list_text(text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c", "tail"});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
    // re-emitted with names, reparses to the same graph
    CHECK(from_edge_list_text(to_edge_list_text(g)) == g);
}

TEST_CASE("edge-list text errors") {
    CHECK_THROWS_AS(from_edge_list_text("0 1\n"), graph_error);
    CHECK_THROWS_AS(from_edge_list_text("n 2\n0\n"), graph_error);
    CHECK_THROWS_AS(from_edge_list_text("n 2\n0 1 2\n"), graph_error);
    CHECK_THROWS_AS(from_edge_list_text("n 1\na b\n"), graph_error);
}
