#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "countkern/graph.hpp"

namespace countkern {

/// Contents of a graph file.
///
///     c <comment>
///     p <n> <m>        exactly once, first non-comment record
///     e <u> <v>        m times, 1-based endpoints
///     t <s> <t>        optional terminal pair
///     k <value>        optional parameter
struct GraphFile {
	Graph graph;
	std::optional<TerminalPair> terminals;
	std::optional<std::uint64_t> k;
};

GraphFile parse_graph(std::istream &in);
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string &path);

void write_graph(std::ostream &out, const GraphFile &file);
std::string format_graph(const GraphFile &file);
void write_graph_file(const std::string &path, const GraphFile &file);

} // namespace countkern
