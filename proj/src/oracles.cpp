#include "countkern/oracles.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <random>
#include <functional>
#include <set>

#include "countkern/errors.hpp"
#include "enumerate.hpp"

namespace countkern::oracles {

namespace {

using detail::candidate_count;
using detail::count_subsets_parallel;
using detail::require_enumerable;

std::vector<BigCount> to_big(const std::vector<std::uint64_t> &v)
{
	return {v.begin(), v.end()};
}

BigCount sum_big(const std::vector<std::uint64_t> &v)
{
	BigCount s = 0;
	for (auto x : v)
		s += x;
	return s;
}

bool covers(const Graph &g, const std::vector<char> &in)
{
	for (const auto &e : g.edges())
		if (!in[e.u] && !in[e.v])
			return false;
	return true;
}

// Every vertex of the cover has a neighbour outside it, so no proper subset covers.
bool cover_is_minimal(const Graph &g, const std::vector<char> &in)
{
	for (Vertex v = 0; v < g.n(); ++v) {
		if (!in[v])
			continue;
		bool has_outside = false;
		for (auto w : g.neighbors(v)) {
			if (!in[w]) {
				has_outside = true;
				break;
			}
		}
		if (!has_outside)
			return false;
	}
	return true;
}

struct RemainderShape {
	bool bipartite = true;
	std::size_t components = 0;
	std::size_t vertices = 0;
};

// Bipartiteness and component count of g minus the removed vertices.
RemainderShape inspect_remainder(const Graph &g, const std::vector<char> &removed, std::vector<int> &color, std::vector<Vertex> &queue)
{
	RemainderShape shape;
	std::fill(color.begin(), color.end(), -1);
	for (Vertex r = 0; r < g.n(); ++r) {
		if (removed[r] || color[r] != -1)
			continue;
		++shape.components;
		color[r] = 0;
		queue.clear();
		queue.push_back(r);
		for (std::size_t head = 0; head < queue.size(); ++head) {
			Vertex u = queue[head];
			++shape.vertices;
			for (auto w : g.neighbors(u)) {
				if (removed[w])
					continue;
				if (color[w] == -1) {
					color[w] = 1 - color[u];
					queue.push_back(w);
				} else if (color[w] == color[u]) {
					shape.bipartite = false;
				}
			}
		}
	}
	return shape;
}

bool oct_violates_niceness(const RemainderShape &shape)
{
	return shape.bipartite && shape.components != 1;
}

class VertexSetChecker {
public:
	explicit VertexSetChecker(const Graph &g) : g_(&g), in_(g.n(), 0), color_(g.n()), queue_() { queue_.reserve(g.n()); }

protected:
	void mark(std::span<const std::uint32_t> subset, char value)
	{
		for (auto v : subset)
			in_[v] = value;
	}

	const Graph *g_;
	std::vector<char> in_;
	std::vector<int> color_;
	std::vector<Vertex> queue_;
};

struct CoverChecker : VertexSetChecker {
	using VertexSetChecker::VertexSetChecker;
	bool operator()(std::span<const std::uint32_t> s)
	{
		mark(s, 1);
		bool ok = covers(*g_, in_);
		mark(s, 0);
		return ok;
	}
};

struct MinimalCoverChecker : VertexSetChecker {
	using VertexSetChecker::VertexSetChecker;
	bool operator()(std::span<const std::uint32_t> s)
	{
		mark(s, 1);
		bool ok = covers(*g_, in_) && cover_is_minimal(*g_, in_);
		mark(s, 0);
		return ok;
	}
};

struct OctChecker : VertexSetChecker {
	using VertexSetChecker::VertexSetChecker;
	bool operator()(std::span<const std::uint32_t> s)
	{
		mark(s, 1);
		bool ok = inspect_remainder(*g_, in_, color_, queue_).bipartite;
		mark(s, 0);
		return ok;
	}
};

struct NicenessViolationChecker : VertexSetChecker {
	using VertexSetChecker::VertexSetChecker;
	bool operator()(std::span<const std::uint32_t> s)
	{
		mark(s, 1);
		bool bad = oct_violates_niceness(inspect_remainder(*g_, in_, color_, queue_));
		mark(s, 0);
		return bad;
	}
};

using Incidence = std::vector<std::vector<std::pair<Vertex, std::uint32_t>>>;

Incidence incidence(const Graph &g)
{
	Incidence inc(g.n());
	for (std::size_t i = 0; i < g.m(); ++i) {
		const auto &e = g.edges()[i];
		inc[e.u].push_back({e.v, static_cast<std::uint32_t>(i)});
		inc[e.v].push_back({e.u, static_cast<std::uint32_t>(i)});
	}
	return inc;
}

bool separates_with(const Incidence &inc, const TerminalPair &st, const std::vector<char> &removed, std::vector<char> &seen,
                    std::vector<Vertex> &stack)
{
	std::fill(seen.begin(), seen.end(), 0);
	stack.clear();
	stack.push_back(st.s);
	seen[st.s] = 1;
	while (!stack.empty()) {
		Vertex u = stack.back();
		stack.pop_back();
		for (auto [w, e] : inc[u]) {
			if (removed[e] || seen[w])
				continue;
			if (w == st.t)
				return false;
			seen[w] = 1;
			stack.push_back(w);
		}
	}
	return true;
}

struct CutChecker {
	CutChecker(const Graph &g, TerminalPair st, const Incidence &inc) : st_(st), inc_(&inc), removed_(g.m(), 0), seen_(g.n()) {}
	bool operator()(std::span<const std::uint32_t> s)
	{
		for (auto e : s)
			removed_[e] = 1;
		bool ok = separates_with(*inc_, st_, removed_, seen_, stack_);
		for (auto e : s)
			removed_[e] = 0;
		return ok;
	}

	TerminalPair st_;
	const Incidence *inc_;
	std::vector<char> removed_;
	std::vector<char> seen_;
	std::vector<Vertex> stack_;
};

std::uint64_t vertex_budget(const Graph &g, std::uint64_t k)
{
	return std::min<std::uint64_t>(k, g.n());
}

} // namespace

BigCount count_vertex_covers(const Graph &g, std::uint64_t k)
{
	auto by_size = count_vertex_covers_by_size(g, vertex_budget(g, k));
	BigCount s = 0;
	for (const auto &c : by_size)
		s += c;
	return s;
}

std::vector<BigCount> count_vertex_covers_by_size(const Graph &g, std::uint64_t kmax)
{
	require_enumerable(candidate_count(g.n(), 0, kmax), kEnumerationLimit, "count_vertex_covers");
	auto counts = to_big(count_subsets_parallel(g.n(), 0, vertex_budget(g, kmax), [&] { return CoverChecker(g); }));
	counts.resize(kmax + 1, 0);
	return counts;
}

BigCount count_minimal_vertex_covers(const Graph &g, std::uint64_t k)
{
	k = vertex_budget(g, k);
	require_enumerable(candidate_count(g.n(), 0, k), kEnumerationLimit, "count_minimal_vertex_covers");
	return sum_big(count_subsets_parallel(g.n(), 0, k, [&] { return MinimalCoverChecker(g); }));
}

BigCount count_odd_cycle_transversals(const Graph &g, std::uint64_t k)
{
	k = vertex_budget(g, k);
	require_enumerable(candidate_count(g.n(), 0, k), kEnumerationLimit, "count_odd_cycle_transversals");
	return sum_big(count_subsets_parallel(g.n(), 0, k, [&] { return OctChecker(g); }));
}

bool is_nice_oct_instance(const Graph &g, std::uint64_t k)
{
	k = vertex_budget(g, k);
	require_enumerable(candidate_count(g.n(), 0, k), kEnumerationLimit, "is_nice_oct_instance");
	auto bad = count_subsets_parallel(g.n(), 0, k, [&] { return NicenessViolationChecker(g); });
	return std::all_of(bad.begin(), bad.end(), [](std::uint64_t c) { return c == 0; });
}

bool separates(const Graph &g, const TerminalPair &st, const std::vector<char> &removed_edges)
{
	check_terminals(g, st);
	if (removed_edges.size() != g.m())
		throw DomainError("separates: edge mask has the wrong size");
	std::vector<char> seen(g.n());
	std::vector<Vertex> stack;
	return separates_with(incidence(g), st, removed_edges, seen, stack);
}

std::uint64_t min_cut_size(const Graph &g, const TerminalPair &st)
{
	check_terminals(g, st);
	// Edmonds-Karp on the symmetric unit-capacity network. Arc 2e runs
	// u->v and arc 2e+1 runs v->u for edge e = {u,v}; flow[a] in {-1,0,1}
	// with flow[2e] = -flow[2e+1].
	const auto inc = incidence(g);
	std::vector<int> flow(2 * g.m(), 0);
	auto arc_from = [&](Vertex from, std::uint32_t e) { return g.edges()[e].u == from ? 2 * e : 2 * e + 1; };
	std::uint64_t value = 0;
	for (;;) {
		std::vector<std::int64_t> via(g.n(), -1);
		std::vector<Vertex> prev(g.n());
		std::queue<Vertex> q;
		q.push(st.s);
		via[st.s] = -2;
		while (!q.empty() && via[st.t] == -1) {
			Vertex u = q.front();
			q.pop();
			for (auto [w, e] : inc[u]) {
				auto a = arc_from(u, e);
				if (via[w] != -1 || flow[a] >= 1)
					continue;
				via[w] = a;
				prev[w] = u;
				q.push(w);
			}
		}
		if (via[st.t] == -1)
			break;
		for (Vertex x = st.t; x != st.s; x = prev[x]) {
			auto a = static_cast<std::size_t>(via[x]);
			flow[a] += 1;
			flow[a ^ 1] -= 1;
		}
		++value;
	}
	return value;
}

MinCutCount count_min_st_cuts(const Graph &g, const TerminalPair &st)
{
	MinCutCount out;
	out.cut_size = min_cut_size(g, st);
	require_enumerable(candidate_count(g.m(), out.cut_size, out.cut_size), kEnumerationLimit, "count_min_st_cuts");
	const auto inc = incidence(g);
	out.count = sum_big(count_subsets_parallel(g.m(), out.cut_size, out.cut_size, [&] { return CutChecker(g, st, inc); }));
	return out;
}

namespace {

// Branch on the lowest undecided vertex: leave it unmatched or match it to an
// undecided neighbour. Prunes branches that cannot beat the best found so far.
class MatchingSearch {
public:
	explicit MatchingSearch(const Graph &g) : g_(g), used_(g.n(), 0) {}

	std::uint64_t run()
	{
		rec(0, 0, g_.n());
		return best_;
	}

private:
	void rec(Vertex from, std::uint64_t size, std::size_t free_left)
	{
		if (++nodes_ > kEnumerationLimit)
			throw SizeError("max_matching_size: search exceeds the enumeration limit");
		best_ = std::max(best_, size);
		if (size + free_left / 2 <= best_)
			return;
		Vertex v = from;
		while (v < g_.n() && used_[v])
			++v;
		if (v >= g_.n())
			return;
		used_[v] = 1;
		for (auto w : g_.neighbors(v)) {
			if (used_[w])
				continue;
			used_[w] = 1;
			rec(v + 1, size + 1, free_left - 2);
			used_[w] = 0;
		}
		rec(v + 1, size, free_left - 1);
		used_[v] = 0;
	}

	const Graph &g_;
	std::vector<char> used_;
	std::uint64_t best_ = 0;
	std::uint64_t nodes_ = 0;
};

bool augment(std::uint32_t u, const std::vector<std::vector<std::uint32_t>> &adj, std::vector<std::int64_t> &match_right,
             std::vector<char> &visited)
{
	for (auto w : adj[u]) {
		if (visited[w])
			continue;
		visited[w] = 1;
		if (match_right[w] < 0 || augment(static_cast<std::uint32_t>(match_right[w]), adj, match_right, visited)) {
			match_right[w] = u;
			return true;
		}
	}
	return false;
}

} // namespace

std::uint64_t max_matching_size(const Graph &g)
{
	return MatchingSearch(g).run();
}

std::uint64_t bipartite_matching_size(std::size_t left, std::size_t right, const std::vector<std::vector<std::uint32_t>> &adj)
{
	std::vector<std::int64_t> match_right(right, -1);
	std::uint64_t size = 0;
	for (std::uint32_t u = 0; u < left; ++u) {
		std::vector<char> visited(right, 0);
		if (augment(u, adj, match_right, visited))
			++size;
	}
	return size;
}

std::string HalfInteger::str() const
{
	if (twice % 2 == 0)
		return std::to_string(twice / 2);
	return std::to_string(twice) + "/2";
}

HalfInteger lp_vc_value(const Graph &g)
{
	// Double cover: left copy u_L joined to right copy v_R for each edge.
	std::vector<std::vector<std::uint32_t>> adj(g.n());
	for (const auto &e : g.edges()) {
		adj[e.u].push_back(e.v);
		adj[e.v].push_back(e.u);
	}
	return HalfInteger{bipartite_matching_size(g.n(), g.n(), adj)};
}

namespace {

std::uint64_t min_cover_branch(const Graph &g, std::vector<char> &in, std::uint64_t budget)
{
	for (const auto &e : g.edges()) {
		if (in[e.u] || in[e.v])
			continue;
		if (budget == 0)
			return UINT64_MAX;
		std::uint64_t best = UINT64_MAX;
		for (Vertex pick : {e.u, e.v}) {
			in[pick] = 1;
			auto r = min_cover_branch(g, in, budget - 1);
			in[pick] = 0;
			if (r != UINT64_MAX)
				best = std::min(best, r + 1);
		}
		return best;
	}
	return 0;
}

} // namespace

std::uint64_t min_vertex_cover_size(const Graph &g)
{
	std::vector<char> in(g.n(), 0);
	for (std::uint64_t k = 0;; ++k) {
		if (k >= 40)
			throw SizeError("min_vertex_cover_size: cover too large to search");
		if (min_cover_branch(g, in, k) != UINT64_MAX)
			return k;
	}
}

TreeDecomposition decomposition_from_order(const Graph &g, const std::vector<Vertex> &order)
{
	const std::size_t n = g.n();
	TreeDecomposition td;
	if (n == 0) {
		td.bags.emplace_back();
		return td;
	}
	if (order.size() != n)
		throw DomainError("elimination order must list every vertex once");
	std::vector<std::size_t> pos(n, n);
	for (std::size_t i = 0; i < n; ++i) {
		if (order[i] >= n || pos[order[i]] != n)
			throw DomainError("elimination order must list every vertex once");
		pos[order[i]] = i;
	}
	std::vector<std::set<Vertex>> fill(n);
	for (const auto &e : g.edges()) {
		fill[e.u].insert(e.v);
		fill[e.v].insert(e.u);
	}
	td.bags.resize(n);
	std::vector<std::size_t> roots;
	for (std::size_t i = 0; i < n; ++i) {
		Vertex v = order[i];
		std::vector<Vertex> later(fill[v].begin(), fill[v].end());
		td.bags[i] = later;
		td.bags[i].push_back(v);
		std::sort(td.bags[i].begin(), td.bags[i].end());
		for (auto a : later) {
			fill[a].erase(v);
			for (auto b : later)
				if (a != b)
					fill[a].insert(b);
		}
		if (later.empty()) {
			roots.push_back(i);
		} else {
			std::size_t parent = n;
			for (auto a : later)
				parent = std::min(parent, pos[a]);
			td.tree_edges.push_back({i, parent});
		}
	}
	for (std::size_t r = 1; r < roots.size(); ++r)
		td.tree_edges.push_back({roots[r - 1], roots[r]});
	return td;
}

TreeDecomposition heuristic_tree_decomposition(const Graph &g)
{
	const std::size_t n = g.n();
	std::vector<std::set<Vertex>> fill(n);
	for (const auto &e : g.edges()) {
		fill[e.u].insert(e.v);
		fill[e.v].insert(e.u);
	}
	std::vector<char> gone(n, 0);
	std::vector<Vertex> order;
	for (std::size_t step = 0; step < n; ++step) {
		Vertex best = 0;
		std::size_t best_deg = SIZE_MAX;
		for (Vertex v = 0; v < n; ++v) {
			if (!gone[v] && fill[v].size() < best_deg) {
				best = v;
				best_deg = fill[v].size();
			}
		}
		std::vector<Vertex> nb(fill[best].begin(), fill[best].end());
		for (auto a : nb) {
			fill[a].erase(best);
			for (auto b : nb)
				if (a != b)
					fill[a].insert(b);
		}
		gone[best] = 1;
		order.push_back(best);
	}
	return decomposition_from_order(g, order);
}

TreewidthResult exact_treewidth(const Graph &g)
{
	const std::size_t n = g.n();
	if (n > kTreewidthMaxVertices)
		throw SizeError("exact_treewidth: " + std::to_string(n) + " vertices exceed the limit of " +
		                std::to_string(kTreewidthMaxVertices));
	TreewidthResult out;
	if (n == 0) {
		out.witness = decomposition_from_order(g, {});
		return out;
	}
	std::vector<std::uint32_t> adj(n, 0);
	for (const auto &e : g.edges()) {
		adj[e.u] |= 1u << e.v;
		adj[e.v] |= 1u << e.u;
	}
	// |Q(S, v)|: vertices outside S + v reachable from v through S.
	auto q_size = [&](std::uint32_t s, Vertex v) {
		std::uint32_t reach = 1u << v;
		std::uint32_t frontier = reach;
		std::uint32_t touched = 0;
		while (frontier) {
			std::uint32_t nb = 0;
			for (std::uint32_t f = frontier; f; f &= f - 1)
				nb |= adj[static_cast<unsigned>(__builtin_ctz(f))];
			touched |= nb;
			frontier = nb & s & ~reach;
			reach |= frontier;
		}
		return static_cast<int>(__builtin_popcount(touched & ~s & ~(1u << v)));
	};
	const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
	std::vector<int> tw(std::size_t{1} << n, 0);
	std::vector<std::uint8_t> choice(std::size_t{1} << n, 0);
	tw[0] = -1;
	for (std::uint32_t s = 1; s <= full; ++s) {
		int best = INT_MAX;
		for (std::uint32_t rest = s; rest; rest &= rest - 1) {
			auto v = static_cast<Vertex>(__builtin_ctz(rest));
			std::uint32_t without = s & ~(1u << v);
			int val = std::max(tw[without], q_size(without, v));
			if (val < best) {
				best = val;
				choice[s] = static_cast<std::uint8_t>(v);
			}
		}
		tw[s] = best;
	}
	out.width = static_cast<std::size_t>(std::max(tw[full], 0));
	std::vector<Vertex> reversed;
	for (std::uint32_t s = full; s; s &= ~(1u << choice[s]))
		reversed.push_back(choice[s]);
	out.elimination_order.assign(reversed.rbegin(), reversed.rend());
	out.witness = decomposition_from_order(g, out.elimination_order);
	return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
	if (!(p >= 0.0 && p <= 1.0))
		throw DomainError("edge probability must lie in [0, 1]");
	std::mt19937_64 rng(seed);
	Graph g(n);
	for (Vertex u = 0; u < n; ++u) {
		for (Vertex v = u + 1; v < n; ++v) {
			// 53 random bits; independent of the standard library's distributions.
			double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
			if (x < p)
				g.add_edge(u, v);
		}
	}
	return g;
}

namespace {

void direct_wi_rec(std::size_t part, std::size_t parts, std::uint64_t d, std::uint64_t used, std::uint64_t budget, const BigCount &product,
                   std::uint64_t t, BinomialTable &binom, BigCount &total)
{
	if (part == parts) {
		std::uint64_t room = budget - used;
		for (std::uint64_t a = 0; a <= std::min(t, room); ++a)
			total += product * binom(t, a);
		return;
	}
	if (d == 0)
		return;
	for (std::uint64_t a = 0; a <= d - 1 && used + a <= budget; ++a)
		direct_wi_rec(part + 1, parts, d, used + a, budget, product * binom(d, a), t, binom, total);
}

} // namespace

BigCount direct_wi(std::uint64_t i, std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2)
{
	if (i > k2 || i > n2)
		throw DomainError("direct_wi: i must not exceed k2 or n2");
	BinomialTable binom;
	BigCount total = 0;
	direct_wi_rec(0, n2 - i, d, 0, d * k2 - d * i, BigCount(1), t, binom, total);
	return total;
}

namespace serial {

namespace {

// Include/exclude search over vertices in index order. A vertex may be left
// out only if none of its already-decided neighbours was left out; `forced`
// counts undecided vertices that some excluded neighbour now forces in, and a
// branch dies once they no longer fit in the remaining budget.
class CoverSearch {
public:
	CoverSearch(const Graph &g, std::uint64_t k, bool minimal_only)
	    : g_(g), k_(k), minimal_only_(minimal_only), in_(g.n(), 0), excluded_nb_(g.n(), 0), tally_(k + 1, 0)
	{
	}

	std::vector<std::uint64_t> run()
	{
		rec(0, 0);
		return tally_;
	}

private:
	void rec(Vertex v, std::uint64_t used)
	{
		if (forced_ > k_ - used)
			return;
		if (v == g_.n()) {
			if (!minimal_only_ || cover_is_minimal(g_, in_))
				++tally_[used];
			return;
		}
		const bool forced_here = excluded_nb_[v] > 0;
		if (forced_here)
			--forced_;
		if (!forced_here) {
			for (auto w : g_.neighbors(v)) {
				if (w > v && excluded_nb_[w]++ == 0)
					++forced_;
			}
			rec(v + 1, used);
			for (auto w : g_.neighbors(v)) {
				if (w > v && --excluded_nb_[w] == 0)
					--forced_;
			}
		}
		if (used < k_) {
			in_[v] = 1;
			rec(v + 1, used + 1);
			in_[v] = 0;
		}
		if (forced_here)
			++forced_;
	}

	const Graph &g_;
	std::uint64_t k_;
	bool minimal_only_;
	std::vector<char> in_;
	std::vector<std::uint32_t> excluded_nb_;
	std::uint64_t forced_ = 0;
	std::vector<std::uint64_t> tally_;
};

template <class Accept>
void subsets_upto(std::size_t n, std::uint64_t k, std::size_t v, std::uint64_t used, std::vector<char> &in, Accept &accept)
{
	if (v == n) {
		accept(in, used);
		return;
	}
	subsets_upto(n, k, v + 1, used, in, accept);
	if (used < k) {
		in[v] = 1;
		subsets_upto(n, k, v + 1, used + 1, in, accept);
		in[v] = 0;
	}
}

void exact_subsets(std::size_t n, std::uint64_t k, std::size_t from, std::vector<char> &in, const std::function<void(const std::vector<char> &)> &accept)
{
	if (k == 0) {
		accept(in);
		return;
	}
	for (std::size_t x = from; x + k <= n; ++x) {
		in[x] = 1;
		exact_subsets(n, k - 1, x + 1, in, accept);
		in[x] = 0;
	}
}

} // namespace

BigCount count_vertex_covers(const Graph &g, std::uint64_t k)
{
	auto by_size = count_vertex_covers_by_size(g, std::min<std::uint64_t>(k, g.n()));
	BigCount s = 0;
	for (const auto &c : by_size)
		s += c;
	return s;
}

std::vector<BigCount> count_vertex_covers_by_size(const Graph &g, std::uint64_t kmax)
{
	require_enumerable(candidate_count(g.n(), 0, kmax), kEnumerationLimit, "count_vertex_covers");
	auto counts = to_big(CoverSearch(g, std::min<std::uint64_t>(kmax, g.n()), false).run());
	counts.resize(kmax + 1, 0);
	return counts;
}

BigCount count_minimal_vertex_covers(const Graph &g, std::uint64_t k)
{
	k = std::min<std::uint64_t>(k, g.n());
	require_enumerable(candidate_count(g.n(), 0, k), kEnumerationLimit, "count_minimal_vertex_covers");
	return sum_big(CoverSearch(g, k, true).run());
}

BigCount count_odd_cycle_transversals(const Graph &g, std::uint64_t k)
{
	k = std::min<std::uint64_t>(k, g.n());
	require_enumerable(candidate_count(g.n(), 0, k), kEnumerationLimit, "count_odd_cycle_transversals");
	std::vector<char> in(g.n(), 0);
	std::vector<int> color(g.n());
	std::vector<Vertex> queue;
	std::uint64_t count = 0;
	auto accept = [&](const std::vector<char> &removed, std::uint64_t) {
		if (inspect_remainder(g, removed, color, queue).bipartite)
			++count;
	};
	subsets_upto(g.n(), k, 0, 0, in, accept);
	return count;
}

bool is_nice_oct_instance(const Graph &g, std::uint64_t k)
{
	k = std::min<std::uint64_t>(k, g.n());
	require_enumerable(candidate_count(g.n(), 0, k), kEnumerationLimit, "is_nice_oct_instance");
	std::vector<char> in(g.n(), 0);
	std::vector<int> color(g.n());
	std::vector<Vertex> queue;
	bool nice = true;
	auto accept = [&](const std::vector<char> &removed, std::uint64_t) {
		if (nice && oct_violates_niceness(inspect_remainder(g, removed, color, queue)))
			nice = false;
	};
	subsets_upto(g.n(), k, 0, 0, in, accept);
	return nice;
}

MinCutCount count_min_st_cuts(const Graph &g, const TerminalPair &st)
{
	MinCutCount out;
	out.cut_size = min_cut_size(g, st);
	require_enumerable(candidate_count(g.m(), out.cut_size, out.cut_size), kEnumerationLimit, "count_min_st_cuts");
	std::vector<char> removed(g.m(), 0);
	std::uint64_t count = 0;
	exact_subsets(g.m(), out.cut_size, 0, removed, [&](const std::vector<char> &r) {
		if (separates(g, st, r))
			++count;
	});
	out.count = count;
	return out;
}

} // namespace serial

} // namespace countkern::oracles
