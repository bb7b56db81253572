#include "countkern/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "countkern/errors.hpp"

namespace countkern {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
{
	Graph g(n);
	for (auto [a, b] : edges)
		g.add_edge(a, b);
	return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
	if (a >= n() || b >= n())
		return false;
	const auto &na = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
	Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
	return std::find(na.begin(), na.end(), other) != na.end();
}

void Graph::add_edge(Vertex a, Vertex b)
{
	if (a >= n() || b >= n())
		throw DomainError("edge endpoint out of range");
	if (a == b)
		throw DomainError("self-loop at vertex " + std::to_string(a));
	if (has_edge(a, b))
		throw DomainError("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
	adj_[a].push_back(b);
	adj_[b].push_back(a);
	edges_.emplace_back(a, b);
}

Vertex Graph::add_vertices(std::size_t count)
{
	auto first = static_cast<Vertex>(adj_.size());
	adj_.resize(adj_.size() + count);
	return first;
}

const std::string &Graph::label(Vertex v) const
{
	static const std::string empty;
	return v < labels_.size() ? labels_[v] : empty;
}

void Graph::set_label(Vertex v, std::string label)
{
	if (v >= n())
		throw DomainError("label for unknown vertex");
	if (labels_.size() < n())
		labels_.resize(n());
	labels_[v] = std::move(label);
}

bool Graph::operator==(const Graph &other) const
{
	if (n() != other.n() || m() != other.m())
		return false;
	auto a = edges_;
	auto b = other.edges_;
	std::sort(a.begin(), a.end());
	std::sort(b.begin(), b.end());
	return a == b;
}

void check_terminals(const Graph &g, const TerminalPair &st)
{
	if (st.s >= g.n() || st.t >= g.n())
		throw DomainError("terminal out of range");
	if (st.s == st.t)
		throw DomainError("terminals must be distinct");
}

std::size_t TreeDecomposition::width() const
{
	std::size_t w = 0;
	for (const auto &bag : bags)
		w = std::max(w, bag.size());
	return w == 0 ? 0 : w - 1;
}

const char *to_string(TdViolation v)
{
	switch (v) {
	case TdViolation::none: return "none";
	case TdViolation::not_a_tree: return "decomposition is not a tree";
	case TdViolation::bad_vertex: return "bag references a vertex outside the graph";
	case TdViolation::edge_not_covered: return "edge contained in no bag";
	case TdViolation::vertex_missing: return "vertex contained in no bag";
	case TdViolation::trace_disconnected: return "bags containing a vertex do not induce a subtree";
	}
	return "?";
}

namespace {

// Connectivity test on the nodes selected by `in`, using tree edges only.
bool induces_connected(std::size_t nodes, const std::vector<std::vector<std::size_t>> &tadj, const std::vector<char> &in)
{
	std::size_t start = nodes, total = 0;
	for (std::size_t i = 0; i < nodes; ++i) {
		if (in[i]) {
			++total;
			if (start == nodes)
				start = i;
		}
	}
	if (total == 0)
		return false;
	std::vector<char> seen(nodes, 0);
	std::vector<std::size_t> stack{start};
	seen[start] = 1;
	std::size_t reached = 0;
	while (!stack.empty()) {
		auto x = stack.back();
		stack.pop_back();
		++reached;
		for (auto y : tadj[x]) {
			if (in[y] && !seen[y]) {
				seen[y] = 1;
				stack.push_back(y);
			}
		}
	}
	return reached == total;
}

} // namespace

TdCheck validate_tree_decomposition(const Graph &g, const TreeDecomposition &td)
{
	TdCheck out;
	const std::size_t nodes = td.bags.size();

	// A tree: non-empty, nodes-1 edges, connected.
	std::vector<std::vector<std::size_t>> tadj(nodes);
	bool tree_ok = nodes > 0 && td.tree_edges.size() == nodes - 1;
	for (auto [a, b] : td.tree_edges) {
		if (a >= nodes || b >= nodes || a == b) {
			tree_ok = false;
			break;
		}
		tadj[a].push_back(b);
		tadj[b].push_back(a);
	}
	if (tree_ok)
		tree_ok = induces_connected(nodes, tadj, std::vector<char>(nodes, 1));
	if (!tree_ok) {
		out.violation = TdViolation::not_a_tree;
		out.detail = std::to_string(nodes) + " nodes, " + std::to_string(td.tree_edges.size()) + " edges";
		return out;
	}

	std::vector<std::vector<std::size_t>> occurs(g.n());
	for (std::size_t i = 0; i < nodes; ++i) {
		for (auto v : td.bags[i]) {
			if (v >= g.n()) {
				out.violation = TdViolation::bad_vertex;
				out.detail = "bag " + std::to_string(i) + " vertex " + std::to_string(v);
				return out;
			}
			occurs[v].push_back(i);
		}
	}

	for (const auto &e : g.edges()) {
		bool covered = false;
		for (auto i : occurs[e.u]) {
			const auto &bag = td.bags[i];
			if (std::find(bag.begin(), bag.end(), e.v) != bag.end()) {
				covered = true;
				break;
			}
		}
		if (!covered) {
			out.violation = TdViolation::edge_not_covered;
			out.detail = "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
			return out;
		}
	}

	std::vector<char> in(nodes);
	for (Vertex v = 0; v < g.n(); ++v) {
		if (occurs[v].empty()) {
			out.violation = TdViolation::vertex_missing;
			out.detail = "vertex " + std::to_string(v);
			return out;
		}
		std::fill(in.begin(), in.end(), 0);
		for (auto i : occurs[v])
			in[i] = 1;
		if (!induces_connected(nodes, tadj, in)) {
			out.violation = TdViolation::trace_disconnected;
			out.detail = "vertex " + std::to_string(v);
			return out;
		}
	}

	out.valid = true;
	return out;
}

Subdivision subdivide_all_edges(const Graph &g)
{
	Subdivision out;
	out.graph = Graph(g.n() + g.m());
	out.edge_vertex.reserve(g.m());
	for (std::size_t i = 0; i < g.m(); ++i) {
		const auto &e = g.edges()[i];
		auto a = static_cast<Vertex>(g.n() + i);
		out.graph.add_edge(e.u, a);
		out.graph.add_edge(a, e.v);
		out.edge_vertex.push_back(a);
	}
	return out;
}

namespace {

Blowup blowup_with_multiplicity(const Graph &g, const std::vector<std::size_t> &mult)
{
	Blowup out;
	out.copies.resize(g.n());
	std::size_t next = 0;
	for (Vertex v = 0; v < g.n(); ++v) {
		for (std::size_t c = 0; c < mult[v]; ++c)
			out.copies[v].push_back(static_cast<Vertex>(next++));
	}
	out.graph = Graph(next);
	for (const auto &e : g.edges()) {
		for (auto a : out.copies[e.u])
			for (auto b : out.copies[e.v])
				out.graph.add_edge(a, b);
	}
	return out;
}

} // namespace

Blowup false_twin_blowup(const Graph &g, std::span<const Vertex> targets, std::size_t copies)
{
	if (copies == 0)
		throw DomainError("false_twin_blowup needs at least one copy");
	std::vector<char> is_target(g.n(), 0);
	for (auto v : targets) {
		if (v >= g.n())
			throw DomainError("blow-up target out of range");
		is_target[v] = 1;
	}
	for (const auto &e : g.edges()) {
		if (is_target[e.u] && is_target[e.v])
			throw UnsupportedBlowupError("targets " + std::to_string(e.u) + " and " + std::to_string(e.v) + " are adjacent");
	}
	std::vector<std::size_t> mult(g.n(), 1);
	for (Vertex v = 0; v < g.n(); ++v)
		if (is_target[v])
			mult[v] = copies;
	return blowup_with_multiplicity(g, mult);
}

Blowup replicate_all_vertices(const Graph &g, std::size_t copies)
{
	return blowup_with_multiplicity(g, std::vector<std::size_t>(g.n(), copies));
}

Graph add_isolated(const Graph &g, std::size_t count)
{
	Graph out = g;
	out.add_vertices(count);
	return out;
}

Chain chain_identify(std::span<const std::pair<Graph, TerminalPair>> instances)
{
	if (instances.empty())
		throw DomainError("chain_identify needs at least one instance");
	Chain out;
	std::size_t total = 0;
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const auto &[g, st] = instances[i];
		check_terminals(g, st);
		total += g.n() - (i == 0 ? 0 : 1);
	}
	out.graph = Graph(total);
	out.vertex_maps.resize(instances.size());
	Vertex next = 0;
	Vertex previous_t = 0;
	for (std::size_t i = 0; i < instances.size(); ++i) {
		const auto &[g, st] = instances[i];
		auto &map = out.vertex_maps[i];
		map.resize(g.n());
		for (Vertex v = 0; v < g.n(); ++v) {
			if (i > 0 && v == st.s)
				map[v] = previous_t;
			else
				map[v] = next++;
		}
		for (const auto &e : g.edges())
			out.graph.add_edge(map[e.u], map[e.v]);
		previous_t = map[st.t];
	}
	out.terminals = {out.vertex_maps.front()[instances.front().second.s], previous_t};
	return out;
}

Bipartiteness is_bipartite(const Graph &g)
{
	Bipartiteness out;
	std::vector<int> color(g.n(), -1);
	std::vector<Vertex> parent(g.n());
	std::vector<std::size_t> depth(g.n(), 0);
	for (Vertex root = 0; root < g.n(); ++root) {
		if (color[root] != -1)
			continue;
		color[root] = 0;
		parent[root] = root;
		std::queue<Vertex> q;
		q.push(root);
		while (!q.empty()) {
			Vertex u = q.front();
			q.pop();
			for (Vertex w : g.neighbors(u)) {
				if (color[w] == -1) {
					color[w] = 1 - color[u];
					parent[w] = u;
					depth[w] = depth[u] + 1;
					q.push(w);
				} else if (color[w] == color[u]) {
					// Tree paths from u and w to their lowest common ancestor
					// plus the edge {u,w} form an odd cycle.
					std::vector<Vertex> up, down;
					Vertex a = u, b = w;
					while (depth[a] > depth[b]) {
						up.push_back(a);
						a = parent[a];
					}
					while (depth[b] > depth[a]) {
						down.push_back(b);
						b = parent[b];
					}
					while (a != b) {
						up.push_back(a);
						down.push_back(b);
						a = parent[a];
						b = parent[b];
					}
					up.push_back(a);
					out.odd_cycle = up;
					out.odd_cycle.insert(out.odd_cycle.end(), down.rbegin(), down.rend());
					return out;
				}
			}
		}
	}
	out.bipartite = true;
	out.coloring = std::move(color);
	return out;
}

std::vector<std::size_t> connected_components(const Graph &g, std::size_t *count)
{
	constexpr auto unset = static_cast<std::size_t>(-1);
	std::vector<std::size_t> comp(g.n(), unset);
	std::size_t next = 0;
	for (Vertex r = 0; r < g.n(); ++r) {
		if (comp[r] != unset)
			continue;
		comp[r] = next;
		std::vector<Vertex> stack{r};
		while (!stack.empty()) {
			Vertex u = stack.back();
			stack.pop_back();
			for (Vertex w : g.neighbors(u)) {
				if (comp[w] == unset) {
					comp[w] = next;
					stack.push_back(w);
				}
			}
		}
		++next;
	}
	if (count)
		*count = next;
	return comp;
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> keep, std::vector<std::optional<Vertex>> *map)
{
	std::vector<std::optional<Vertex>> index(g.n());
	Vertex next = 0;
	for (auto v : keep) {
		if (v >= g.n())
			throw DomainError("induced_subgraph: vertex out of range");
		if (!index[v])
			index[v] = next++;
	}
	Graph out(next);
	for (const auto &e : g.edges()) {
		if (index[e.u] && index[e.v])
			out.add_edge(*index[e.u], *index[e.v]);
	}
	for (Vertex v = 0; v < g.n(); ++v) {
		if (index[v] && !g.label(v).empty())
			out.set_label(*index[v], g.label(v));
	}
	if (map)
		*map = std::move(index);
	return out;
}

} // namespace countkern
