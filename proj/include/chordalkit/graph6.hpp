#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "chordalkit/graph.hpp"

namespace chordalkit {

class parse_error : public graph_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : graph_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

// graph6 interchange format: offset-63 bytes carrying the upper triangle of
// the adjacency matrix column by column, six bits per byte, most significant
// bit first. Only n <= 64 is accepted.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text format: `#` comments, a `n <count>` line, then one `u v`
// pair per line. Endpoints may be vertex names instead of numbers; names are
// assigned ids in order of first appearance and kept as labels.
Graph from_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

} // namespace chordalkit
