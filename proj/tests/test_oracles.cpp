#include <doctest.h>

#include "countkern/errors.hpp"
#include "countkern/oracles.hpp"
#include "helpers.hpp"

using namespace countkern;
using namespace countkern::oracles;
using testutil::make;

namespace {

/// Plain bitmask enumeration, independent of the library's search code.
template <class Pred>
std::uint64_t count_masks(std::size_t n, std::uint64_t k, Pred pred)
{
	std::uint64_t c = 0;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
		if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) <= k && pred(mask))
			++c;
	return c;
}

bool mask_covers(const Graph &g, std::uint64_t mask)
{
	for (const auto &e : g.edges())
		if (!(mask >> e.u & 1) && !(mask >> e.v & 1))
			return false;
	return true;
}

bool mask_bipartite_remainder(const Graph &g, std::uint64_t mask)
{
	std::vector<Vertex> keep;
	for (Vertex v = 0; v < g.n(); ++v)
		if (!(mask >> v & 1))
			keep.push_back(v);
	return is_bipartite(induced_subgraph(g, keep)).bipartite;
}

/// Smallest r such that some r-set of edges separates s and t.
std::uint64_t brute_min_cut(const Graph &g, TerminalPair st)
{
	for (std::uint64_t r = 0; r <= g.m(); ++r)
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
			if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != r)
				continue;
			std::vector<char> removed(g.m());
			for (std::size_t i = 0; i < g.m(); ++i)
				removed[i] = mask >> i & 1;
			if (separates(g, st, removed))
				return r;
		}
	return g.m();
}

} // namespace

TEST_CASE("vertex cover counts")
{
	CHECK(count_vertex_covers(Graph(3), 2) == 7);
	CHECK(count_vertex_covers(make(2, {{0, 1}}), 1) == 2);
	CHECK(count_vertex_covers(testutil::complete(3), 2) == 3);
}

TEST_CASE("minimal vertex cover counts")
{
	CHECK(count_minimal_vertex_covers(make(2, {{0, 1}}), 1) == 2);
	CHECK(count_minimal_vertex_covers(testutil::star(3), 3) == 2);
	CHECK(count_minimal_vertex_covers(Graph(5), 0) == 1);
	CHECK(count_minimal_vertex_covers(Graph(5), 4) == 1);
}

TEST_CASE("odd cycle transversal counts")
{
	CHECK(count_odd_cycle_transversals(testutil::cycle(4), 2) == 1 + 4 + 6);
	CHECK(count_odd_cycle_transversals(testutil::path(5), 5) == 32);
	CHECK(count_odd_cycle_transversals(testutil::cycle(5), 0) == 0);
	CHECK(count_odd_cycle_transversals(testutil::complete(3), 1) == 3);
}

TEST_CASE("minimum cut size")
{
	CHECK(min_cut_size(make(2, {{0, 1}}), {0, 1}) == 1);
	CHECK(min_cut_size(make(4, {{0, 1}, {2, 3}}), {0, 3}) == 0);
	auto k4 = testutil::complete(4);
	for (Vertex s = 0; s < 4; ++s)
		for (Vertex t = 0; t < 4; ++t)
			if (s != t)
				CHECK(min_cut_size(k4, {s, t}) == 3);
}

TEST_CASE("minimum cut counts")
{
	CHECK(count_min_st_cuts(testutil::path(3), {0, 2}).count == 2);
	auto sep = count_min_st_cuts(make(4, {{0, 1}, {2, 3}}), {0, 3});
	CHECK(sep.count == 1);
	CHECK(sep.cut_size == 0);
	auto chain = count_min_st_cuts(testutil::path(5), {0, 4});
	CHECK(chain.count == 4);
	CHECK(chain.cut_size == 1);
	CHECK(count_min_st_cuts(testutil::cycle(4), {0, 2}).count == 4);
}

TEST_CASE("flow value equals brute force minimum cut")
{
	for (std::uint64_t seed = 0; seed < 60; ++seed) {
		auto g = random_graph(6, 0.45, seed);
		TerminalPair st{0, static_cast<Vertex>(1 + seed % 5)};
		CHECK(min_cut_size(g, st) == brute_min_cut(g, st));
	}
}

TEST_CASE("matching, LP and minimum vertex cover")
{
	CHECK(max_matching_size(testutil::cycle(4)) == 2);
	CHECK(max_matching_size(make(2, {{0, 1}})) == 1);
	CHECK(max_matching_size(Graph(3)) == 0);
	CHECK(lp_vc_value(testutil::cycle(5)).str() == "5/2");
	CHECK(lp_vc_value(make(2, {{0, 1}})).str() == "1");
	auto pm = make(6, {{0, 1}, {2, 3}, {4, 5}});
	CHECK(lp_vc_value(pm) == HalfInteger{6});
	CHECK(min_vertex_cover_size(testutil::complete(5)) == 4);
	for (std::uint64_t seed = 0; seed < 80; ++seed) {
		auto g = random_graph(7, 0.35, seed);
		const auto mu = max_matching_size(g);
		const auto lp = lp_vc_value(g);
		const auto vc = min_vertex_cover_size(g);
		CHECK(HalfInteger{2 * mu} <= lp);
		CHECK(lp <= HalfInteger{2 * vc});
	}
}

TEST_CASE("bipartite matching helper")
{
	std::vector<std::vector<std::uint32_t>> adj{{0, 1}, {0}, {1, 2}};
	CHECK(bipartite_matching_size(3, 3, adj) == 3);
	std::vector<std::vector<std::uint32_t>> crowded{{0}, {0}, {0}};
	CHECK(bipartite_matching_size(3, 1, crowded) == 1);
}

TEST_CASE("exact treewidth with witnesses")
{
	auto check = [](const Graph &g, std::size_t expected) {
		auto r = exact_treewidth(g);
		CHECK(r.width == expected);
		CHECK(validate_tree_decomposition(g, r.witness).valid);
		CHECK(r.witness.width() == r.width);
	};
	check(testutil::path(6), 1);
	check(testutil::star(5), 1);
	check(testutil::cycle(4), 2);
	check(testutil::complete(4), 3);
	check(Graph(3), 0);
	Graph grid(9);
	for (Vertex r = 0; r < 3; ++r)
		for (Vertex c = 0; c < 3; ++c) {
			if (c + 1 < 3)
				grid.add_edge(3 * r + c, 3 * r + c + 1);
			if (r + 1 < 3)
				grid.add_edge(3 * r + c, 3 * (r + 1) + c);
		}
	check(grid, 3);
	CHECK_THROWS_AS(exact_treewidth(Graph(13)), SizeError);
}

TEST_CASE("heuristic decomposition is valid and never below treewidth")
{
	for (std::uint64_t seed = 0; seed < 40; ++seed) {
		auto g = random_graph(9, 0.4, seed);
		auto td = heuristic_tree_decomposition(g);
		CHECK(validate_tree_decomposition(g, td).valid);
		CHECK(td.width() >= exact_treewidth(g).width);
	}
	auto big = random_graph(30, 0.1, 3);
	CHECK(validate_tree_decomposition(big, heuristic_tree_decomposition(big)).valid);
}

TEST_CASE("nice transversal instances")
{
	CHECK(is_nice_oct_instance(testutil::complete(3), 1));
	auto two = testutil::operator+(testutil::complete(3), testutil::complete(3));
	CHECK_FALSE(is_nice_oct_instance(two, 2));
	CHECK(is_nice_oct_instance(testutil::cycle(5), 0));
	CHECK_FALSE(is_nice_oct_instance(testutil::path(3), 1));
	CHECK(is_nice_oct_instance(Graph(1), 0));
	CHECK_FALSE(is_nice_oct_instance(Graph(1), 1));
}

TEST_CASE("random graphs")
{
	CHECK(random_graph(5, 0.0, 9).m() == 0);
	CHECK(random_graph(5, 1.0, 9) == testutil::complete(5));
	CHECK(random_graph(4, 0.5, 77) == random_graph(4, 0.5, 77));
	std::size_t differ = 0;
	for (std::uint64_t s = 0; s < 10; ++s)
		differ += !(random_graph(8, 0.5, s) == random_graph(8, 0.5, s + 100));
	CHECK(differ > 0);
}

TEST_CASE("direct w_i sums")
{
	CHECK(direct_wi(1, 2, 12, 1, 2) == 1);
	CHECK(direct_wi(0, 2, 12, 1, 2) == 135);
	CHECK(direct_wi(0, 2, 3, 1, 2) == 27);
}

TEST_CASE("oracles agree with plain bitmask enumeration")
{
	for (std::uint64_t seed = 0; seed < 50; ++seed) {
		auto g = random_graph(7, 0.3 + 0.01 * static_cast<double>(seed % 30), seed);
		for (std::uint64_t k = 0; k <= 5; ++k) {
			CHECK(count_vertex_covers(g, k) == count_masks(g.n(), k, [&](std::uint64_t m) { return mask_covers(g, m); }));
			CHECK(count_odd_cycle_transversals(g, k) ==
			      count_masks(g.n(), k, [&](std::uint64_t m) { return mask_bipartite_remainder(g, m); }));
		}
	}
}

TEST_CASE("parallel and serial oracles agree")
{
	for (std::uint64_t seed = 0; seed < 60; ++seed) {
		auto g = random_graph(8, 0.25 + 0.01 * static_cast<double>(seed % 40), seed);
		for (std::uint64_t k = 0; k <= 5; ++k) {
			CHECK(count_vertex_covers(g, k) == serial::count_vertex_covers(g, k));
			CHECK(count_minimal_vertex_covers(g, k) == serial::count_minimal_vertex_covers(g, k));
			CHECK(count_odd_cycle_transversals(g, k) == serial::count_odd_cycle_transversals(g, k));
			CHECK(is_nice_oct_instance(g, k) == serial::is_nice_oct_instance(g, k));
		}
		CHECK(count_vertex_covers_by_size(g, 8) == serial::count_vertex_covers_by_size(g, 8));
		TerminalPair st{0, 7};
		auto a = count_min_st_cuts(g, st);
		auto b = serial::count_min_st_cuts(g, st);
		CHECK(a.count == b.count);
		CHECK(a.cut_size == b.cut_size);
	}
}

TEST_CASE("oracle invariants")
{
	for (std::uint64_t seed = 0; seed < 40; ++seed) {
		auto g = random_graph(7, 0.4, seed);
		BigCount previous = 0;
		for (std::uint64_t k = 0; k <= 7; ++k) {
			auto c = count_vertex_covers(g, k);
			CHECK(c >= previous);
			CHECK(c >= count_minimal_vertex_covers(g, k));
			previous = c;
		}
		CHECK(count_min_st_cuts(g, {1, 2}).count >= 1);
	}
	BinomialTable binom;
	CHECK(count_vertex_covers(Graph(9), 4) == binom.prefix_sum(9, 4));
}

TEST_CASE("size guard refuses huge enumerations")
{
	CHECK_THROWS_AS(count_vertex_covers(Graph(60), 30), SizeError);
	CHECK_THROWS_AS(count_odd_cycle_transversals(testutil::complete(60), 40), SizeError);
	CHECK_THROWS_AS(count_min_st_cuts(testutil::complete(20), {0, 1}), SizeError);
}
