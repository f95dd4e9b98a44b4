#include "chordalkit/graph6.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace chordalkit {

namespace {

constexpr int g6_lo = 63;  // '?'
constexpr int g6_hi = 126; // '~'

int data_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw parse_error("truncated graph6 string", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < g6_lo || c > g6_hi)
        throw parse_error("byte outside graph6 range", pos);
    return c - g6_lo;
}

} // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty())
        throw parse_error("empty graph6 string", 0);

    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(text[0]) != g6_hi) {
        n = data_byte(text, 0);
        pos = 1;
    } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == g6_hi) {
        throw parse_error("graph6 long-form header exceeds supported size", 1);
    } else {
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | data_byte(text, i);
        pos = 4;
    }
    if (n > Graph::max_vertices)
        throw parse_error("graph6 vertex count " + std::to_string(n) + " exceeds 64", 0);

    Graph g(static_cast<int>(n));
    int bits_left = 0;
    int current = 0;
    std::vector<std::pair<int, int>> edges;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits_left == 0) {
                current = data_byte(text, pos);
                ++pos;
                bits_left = 6;
            }
            --bits_left;
            if ((current >> bits_left) & 1) edges.emplace_back(row, col);
        }
    }
    if (pos != text.size())
        throw parse_error("trailing bytes after graph6 data", pos);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6_lo));
    } else {
        out.push_back(static_cast<char>(g6_hi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + g6_lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + g6_lo));
        out.push_back(static_cast<char>((n & 0x3f) + g6_lo));
    }
    int bits_used = 0;
    int current = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            current = (current << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++bits_used == 6) {
                out.push_back(static_cast<char>(current + g6_lo));
                bits_used = 0;
                current = 0;
            }
        }
    }
    if (bits_used > 0)
        out.push_back(static_cast<char>((current << (6 - bits_used)) + g6_lo));
    return out;
}

namespace {

bool is_number(const std::string& tok) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Graph from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<std::string, std::string>> raw_edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (n < 0) {
            if (a != "n" || !(ls >> b) || !is_number(b))
                throw graph_error("edge-list input must start with a 'n <count>' line");
            n = std::stoi(b);
            continue;
        }
        if (!(ls >> b))
            throw graph_error("edge line with a single endpoint: '" + a + "'");
        std::string extra;
        if (ls >> extra)
            throw graph_error("edge line with more than two endpoints");
        raw_edges.emplace_back(a, b);
    }
    if (n < 0)
        throw graph_error("edge-list input missing 'n <count>' line");

    bool numeric = true;
    for (auto& [a, b] : raw_edges)
        numeric = numeric && is_number(a) && is_number(b);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    if (numeric) {
        for (auto& [a, b] : raw_edges) edges.emplace_back(std::stoi(a), std::stoi(b));
    } else {
        std::unordered_map<std::string, int> ids;
        auto id_of = [&](const std::string& name) {
            auto it = ids.find(name);
            if (it != ids.end()) return it->second;
            int id = static_cast<int>(names.size());
            if (id >= n) throw graph_error("more vertex names than declared count");
            ids.emplace(name, id);
            names.push_back(name);
            return id;
        };
        for (auto& [a, b] : raw_edges) {
            int ia = id_of(a);
            int ib = id_of(b);
            edges.emplace_back(ia, ib);
        }
        while (static_cast<int>(names.size()) < n)
            names.push_back("v" + std::to_string(names.size()));
    }
    Graph g = Graph::from_edge_list(n, edges);
    if (!names.empty()) g.set_labels(std::move(names));
    return g;
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += g.label(u) + " " + g.label(v) + "\n";
    return out;
}

} // namespace chordalkit
