#include "countkern/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "countkern/errors.hpp"

namespace countkern {

namespace {

std::vector<std::string_view> split_fields(std::string_view line)
{
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if (j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

std::uint64_t parse_uint(std::string_view field, std::size_t line, const char *what)
{
	std::uint64_t value = 0;
	auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
	if (ec != std::errc() || ptr != field.data() + field.size())
		throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
	return value;
}

Vertex parse_vertex(std::string_view field, std::size_t line, std::uint64_t n)
{
	auto v = parse_uint(field, line, "vertex index");
	if (v < 1 || v > n)
		throw ParseError(line, "vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
	return static_cast<Vertex>(v - 1);
}

void expect_fields(const std::vector<std::string_view> &f, std::size_t count, std::size_t line)
{
	if (f.size() != count)
		throw ParseError(line, "record '" + std::string(f[0]) + "' expects " + std::to_string(count - 1) + " fields");
}

} // namespace

GraphFile parse_graph(std::istream &in)
{
	GraphFile out;
	bool have_header = false;
	std::uint64_t declared_m = 0;
	std::size_t line_no = 0;
	std::string line;
	while (std::getline(in, line)) {
		++line_no;
		auto f = split_fields(line);
		if (f.empty() || f[0] == "c")
			continue;
		const auto tag = f[0];
		if (tag == "p") {
			if (have_header)
				throw ParseError(line_no, "duplicate 'p' record");
			expect_fields(f, 3, line_no);
			auto n = parse_uint(f[1], line_no, "vertex count");
			if (n > 0xffffffffull)
				throw ParseError(line_no, "vertex count too large");
			declared_m = parse_uint(f[2], line_no, "edge count");
			out.graph = Graph(n);
			have_header = true;
			continue;
		}
		if (!have_header)
			throw ParseError(line_no, "expected 'p <n> <m>' before '" + std::string(tag) + "'");
		if (tag == "e") {
			expect_fields(f, 3, line_no);
			auto u = parse_vertex(f[1], line_no, out.graph.n());
			auto v = parse_vertex(f[2], line_no, out.graph.n());
			if (u == v)
				throw ParseError(line_no, "self-loop at vertex " + std::to_string(u + 1));
			if (out.graph.has_edge(u, v))
				throw ParseError(line_no, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
			if (out.graph.m() == declared_m)
				throw ParseError(line_no, "more edges than declared (" + std::to_string(declared_m) + ")");
			out.graph.add_edge(u, v);
		} else if (tag == "t") {
			expect_fields(f, 3, line_no);
			if (out.terminals)
				throw ParseError(line_no, "duplicate 't' record");
			auto s = parse_vertex(f[1], line_no, out.graph.n());
			auto t = parse_vertex(f[2], line_no, out.graph.n());
			if (s == t)
				throw ParseError(line_no, "terminals must be distinct");
			out.terminals = TerminalPair{s, t};
		} else if (tag == "k") {
			expect_fields(f, 2, line_no);
			if (out.k)
				throw ParseError(line_no, "duplicate 'k' record");
			out.k = parse_uint(f[1], line_no, "parameter");
		} else {
			throw ParseError(line_no, "unknown record '" + std::string(tag) + "'");
		}
	}
	if (!have_header)
		throw ParseError(line_no, "missing 'p <n> <m>' record");
	if (out.graph.m() != declared_m)
		throw ParseError(line_no, "declared " + std::to_string(declared_m) + " edges, found " + std::to_string(out.graph.m()));
	return out;
}

GraphFile parse_graph(std::string_view text)
{
	std::istringstream in{std::string(text)};
	return parse_graph(in);
}

GraphFile read_graph_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw ParseError("cannot open graph file '" + path + "'");
	return parse_graph(in);
}

void write_graph(std::ostream &out, const GraphFile &file)
{
	const auto &g = file.graph;
	out << "p " << g.n() << ' ' << g.m() << '\n';
	for (const auto &e : g.edges())
		out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
	if (file.terminals)
		out << "t " << file.terminals->s + 1 << ' ' << file.terminals->t + 1 << '\n';
	if (file.k)
		out << "k " << *file.k << '\n';
}

std::string format_graph(const GraphFile &file)
{
	std::ostringstream out;
	write_graph(out, file);
	return out.str();
}

void write_graph_file(const std::string &path, const GraphFile &file)
{
	std::ofstream out(path);
	if (!out)
		throw ParseError("cannot write graph file '" + path + "'");
	write_graph(out, file);
}

} // namespace countkern
