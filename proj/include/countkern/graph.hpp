#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace countkern {

using Vertex = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
	Vertex u;
	Vertex v;

	Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

	bool operator==(const Edge &) const = default;
	auto operator<=>(const Edge &) const = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges keep their insertion order, so an edge index is a stable handle
/// (subdivision and cut enumeration address edges by index).
class Graph {
public:
	Graph() = default;
	explicit Graph(std::size_t n) : adj_(n) {}

	/// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
	static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

	std::size_t n() const { return adj_.size(); }
	std::size_t m() const { return edges_.size(); }

	const std::vector<Edge> &edges() const { return edges_; }
	const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
	std::size_t degree(Vertex v) const { return adj_[v].size(); }
	bool has_edge(Vertex a, Vertex b) const;

	/// Adds {a, b}; throws DomainError on a self-loop, duplicate or bad index.
	void add_edge(Vertex a, Vertex b);

	/// Appends `count` isolated vertices and returns the index of the first.
	Vertex add_vertices(std::size_t count = 1);

	/// Provenance label, empty when none was set.
	const std::string &label(Vertex v) const;
	void set_label(Vertex v, std::string label);
	bool has_labels() const { return !labels_.empty(); }

	bool operator==(const Graph &other) const;

private:
	std::vector<std::vector<Vertex>> adj_;
	std::vector<Edge> edges_;
	std::vector<std::string> labels_;
};

struct TerminalPair {
	Vertex s;
	Vertex t;

	bool operator==(const TerminalPair &) const = default;
};

/// Throws DomainError unless s != t and both are vertices of g.
void check_terminals(const Graph &g, const TerminalPair &st);

struct TreeDecomposition {
	std::vector<std::vector<Vertex>> bags;
	std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

	/// Largest bag size minus one (0 for a decomposition without non-empty bags).
	std::size_t width() const;
};

enum class TdViolation {
	none,
	not_a_tree,
	bad_vertex,
	edge_not_covered,
	vertex_missing,
	trace_disconnected,
};

struct TdCheck {
	bool valid = false;
	TdViolation violation = TdViolation::none;
	std::string detail;
};

TdCheck validate_tree_decomposition(const Graph &g, const TreeDecomposition &td);

const char *to_string(TdViolation v);

/// Result of subdividing every edge once. Original vertices keep their
/// indices; the vertex on edge e is edge_vertex[e] = n + e.
struct Subdivision {
	Graph graph;
	std::vector<Vertex> edge_vertex;
};

Subdivision subdivide_all_edges(const Graph &g);

/// Vertex-replacement result; copies[v] lists the new indices standing for v.
struct Blowup {
	Graph graph;
	std::vector<std::vector<Vertex>> copies;
};

/// Replaces each target by `copies` pairwise non-adjacent twins of it.
/// Targets must form an independent set.
Blowup false_twin_blowup(const Graph &g, std::span<const Vertex> targets, std::size_t copies);

/// Replaces every vertex by `copies` independent copies and every edge {u,v}
/// by all edges {u_i, v_j}. Copies of v occupy indices v*copies .. v*copies+copies-1.
Blowup replicate_all_vertices(const Graph &g, std::size_t copies);

Graph add_isolated(const Graph &g, std::size_t count);

/// Disjoint union of instances with t_i identified with s_{i+1}.
struct Chain {
	Graph graph;
	TerminalPair terminals;
	/// vertex_maps[i][v] is the chain vertex standing for vertex v of input i.
	std::vector<std::vector<Vertex>> vertex_maps;
};

Chain chain_identify(std::span<const std::pair<Graph, TerminalPair>> instances);

struct Bipartiteness {
	bool bipartite = false;
	/// 0/1 colour per vertex when bipartite.
	std::vector<int> coloring;
	/// Odd cycle v0, v1, ..., v_{L-1} (closing edge v_{L-1}v0) otherwise.
	std::vector<Vertex> odd_cycle;
};

Bipartiteness is_bipartite(const Graph &g);

/// Component id per vertex; ids are 0.. in order of smallest vertex.
std::vector<std::size_t> connected_components(const Graph &g, std::size_t *count = nullptr);

/// Induced subgraph on `keep`; map[v] gives the new index of kept vertex v.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> keep, std::vector<std::optional<Vertex>> *map = nullptr);

} // namespace countkern
