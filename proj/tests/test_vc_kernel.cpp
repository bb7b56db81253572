#include <doctest.h>

#include "countkern/errors.hpp"
#include "countkern/oracles.hpp"
#include "countkern/vc_kernel.hpp"
#include "helpers.hpp"

using namespace countkern;
using namespace countkern::vc;
using testutil::make;

namespace {

/// w_i by inclusion-exclusion over vertices that would lose all copies.
BigCount closed_form_wi(std::uint64_t i, std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2)
{
	BinomialTable binom;
	const std::uint64_t l = n2 - i;
	const std::int64_t budget = static_cast<std::int64_t>(d * (k2 - i));
	BigCount w = 0;
	for (std::uint64_t j = 0; j <= l; ++j) {
		const std::int64_t room = budget - static_cast<std::int64_t>(d * j);
		if (room < 0)
			break;
		BigCount term = binom(l, j) * binom.prefix_sum(t + d * (l - j), static_cast<std::uint64_t>(room));
		if (j % 2)
			w -= term;
		else
			w += term;
	}
	return w;
}

Graph double_star()
{
	return make(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {0, 4}});
}

} // namespace

TEST_CASE("high-degree reduction")
{
	auto r = buss_reduce(testutil::star(5), 2);
	REQUIRE(r);
	CHECK(r->k == 1);
	CHECK(r->graph.n() == 5);
	CHECK(r->graph.m() == 0);
	CHECK(r->kept == std::vector<Vertex>{1, 2, 3, 4, 5});

	auto tri = buss_reduce(testutil::complete(3), 2);
	REQUIRE(tri);
	CHECK(tri->k == 2);
	CHECK(tri->graph == testutil::complete(3));

	CHECK_FALSE(buss_reduce(double_star(), 1));
	auto ds = buss_reduce(double_star(), 2);
	REQUIRE(ds);
	CHECK(ds->k == 0);
	CHECK(ds->graph.m() == 0);
	CHECK_FALSE(buss_reduce(make(2, {{0, 1}}), 0));
}

TEST_CASE("isolated vertex stripping")
{
	auto s = strip_isolated(Graph(5), 1);
	CHECK(s.graph.n() == 0);
	CHECK(s.n1 == 5);
	CHECK(s.k2 == 1);
	auto p = strip_isolated(make(4, {{1, 2}}), 3);
	CHECK(p.graph == make(2, {{0, 1}}));
	CHECK(p.n1 == 4);
}

TEST_CASE("padded replica construction")
{
	auto e = build_g3(make(2, {{0, 1}}), 1);
	CHECK(e.d == 2);
	CHECK(e.t == 12);
	CHECK(e.k3 == 2);
	CHECK(e.graph.n() == 16);
	CHECK(e.graph.m() == 4);

	auto p3 = build_g3(testutil::path(3), 1);
	CHECK(p3.d == 3);
	CHECK(p3.t == 24);
	CHECK(p3.k3 == 3);
	CHECK(p3.graph.n() == 33);
	CHECK(p3.graph.m() == 18);

	CHECK(padding_size(2, 1) == 12);
	CHECK(padding_size(0, 5) == 0);
	CHECK_THROWS_AS(padding_size(std::uint64_t{1} << 40, std::uint64_t{1} << 20), DomainError);
}

TEST_CASE("reduce branches")
{
	auto zero = vc_reduce(vc_instance(testutil::complete(5), 1));
	CHECK(zero.context.branch == Branch::zero);
	CHECK(zero.reduced.graph == zero_instance());
	CHECK(zero.reduced.k == 0);
	CHECK(vc_lift(zero.context, 0) == 0);

	auto many_edges = vc_reduce(vc_instance(testutil::operator+(testutil::cycle(4), testutil::cycle(4)), 2));
	CHECK(many_edges.context.branch == Branch::zero);

	auto normal = vc_reduce(vc_instance(make(2, {{0, 1}}), 1));
	CHECK(normal.context.branch == Branch::normal);
	CHECK(normal.context.n1 == 2);
	CHECK(normal.context.n2 == 2);
	CHECK(normal.context.k3 == 2);
}

TEST_CASE("reduce rejects other problems")
{
	CHECK_THROWS_AS(vc_reduce(minimal_vc_instance(testutil::path(3), 1)), PreconditionError);
	auto inst = vc_instance(testutil::path(3), 1);
	inst.param_kind = ParamKind::treewidth;
	CHECK_THROWS_AS(vc_reduce(inst), PreconditionError);
}

TEST_CASE("weights")
{
	CHECK(compute_wi(1, 2, 12, 1, 2) == 1);
	CHECK(compute_wi(0, 2, 12, 1, 2) == 135);
	CHECK(compute_wi(0, 2, 3, 1, 2) == 27);
	auto all = compute_all_wi(2, 12, 1, 2);
	REQUIRE(all.size() == 2);
	CHECK(all[0] == 135);
	CHECK(all[1] == 1);
	CHECK_THROWS_AS(compute_wi(2, 2, 12, 1, 2), DomainError);
	CHECK_THROWS_AS(compute_wi(1, 2, 12, 3, 0), DomainError);
	CHECK(compute_wi(0, 0, 0, 1, 0) == 1);
}

TEST_CASE("weights match the inclusion-exclusion closed form")
{
	for (std::uint64_t n2 = 0; n2 <= 8; ++n2)
		for (std::uint64_t k2 = 0; k2 <= 4; ++k2)
			for (std::uint64_t d = 1; d <= 4; ++d)
				for (std::uint64_t t : {std::uint64_t{0}, std::uint64_t{3}, padding_size(d, k2)}) {
					auto all = compute_all_wi(d, t, k2, n2);
					for (std::uint64_t i = 0; i <= std::min(k2, n2); ++i) {
						CHECK(all[i] == closed_form_wi(i, d, t, k2, n2));
						CHECK(compute_wi(i, d, t, k2, n2) == all[i]);
					}
				}
}

TEST_CASE("weights match direct enumeration")
{
	for (std::uint64_t n2 = 0; n2 <= 4; ++n2)
		for (std::uint64_t k2 = 0; k2 <= 2; ++k2)
			for (std::uint64_t d = 1; d <= 3; ++d)
				for (std::uint64_t t = 0; t <= 5; t += 5)
					for (std::uint64_t i = 0; i <= std::min(k2, n2); ++i)
						CHECK(compute_wi(i, d, t, k2, n2) == oracles::direct_wi(i, d, t, k2, n2));
}

TEST_CASE("lift examples")
{
	auto edge = vc_reduce(vc_instance(make(2, {{0, 1}}), 1));
	CHECK(vc_lift(edge.context, 2) == 2);

	auto star = vc_reduce(vc_instance(testutil::star(5), 2));
	CHECK(star.context.n1 == 5);
	CHECK(star.context.n2 == 0);
	CHECK(star.reduced.graph.n() == 0);
	CHECK(vc_lift(star.context, 1) == 6);
	CHECK(oracles::count_vertex_covers(testutil::star(5), 2) == 6);
}

TEST_CASE("lift rejects impossible counts")
{
	auto r = vc_reduce(vc_instance(make(2, {{0, 1}}), 3));
	REQUIRE(r.context.branch == Branch::normal);
	CHECK(r.context.k2 == 3);
	CHECK_THROWS_AS(vc_lift(r.context, 1), IntegrityError);
	CHECK_THROWS_AS(vc_lift(r.context, -1), IntegrityError);
	const auto good = reduced_count_by_partition(make(2, {{0, 1}}), r.context.d, r.context.t, r.context.k2);
	CHECK(vc_lift(r.context, good) == 3);
}

TEST_CASE("partition identity against brute force on the reduced graph")
{
	auto g2 = testutil::path(3);
	for (std::uint64_t d = 1; d <= 3; ++d)
		for (std::uint64_t t : {0, 2, 4}) {
			auto g3 = build_g3(g2, 2, d, t);
			CHECK(oracles::count_vertex_covers(g3.graph, g3.k3) == reduced_count_by_partition(g2, d, t, 2));
		}
}

TEST_CASE("context payload")
{
	auto r = vc_reduce(vc_instance(testutil::cycle(4), 2));
	auto again = VcLiftContext::from_payload(r.context.to_payload());
	CHECK(again == r.context);
	CHECK(r.context.to_payload().at("n1").is_string());

	auto broken = r.context.to_payload();
	broken["t"] = "5";
	CHECK_THROWS_AS(VcLiftContext::from_payload(broken), IntegrityError);
	auto garbled = r.context.to_payload();
	garbled["n2"] = "four";
	CHECK_THROWS_AS(VcLiftContext::from_payload(garbled), ParseError);
	auto missing = r.context.to_payload();
	missing.erase("d");
	CHECK_THROWS_AS(VcLiftContext::from_payload(missing), ParseError);
}

TEST_CASE("reduced graph recovers its core")
{
	auto g = make(6, {{0, 1}, {1, 2}, {3, 4}});
	auto r = vc_reduce(vc_instance(g, 3));
	REQUIRE(r.context.branch == Branch::normal);
	auto core = g2_from_g3(r.reduced.graph, r.context);
	CHECK(core.n() == 5);
	CHECK(core.m() == 3);
}

TEST_CASE("kernel end to end on small graphs")
{
	auto kernel = vc_kernel();
	for (std::uint64_t seed = 0; seed < 40; ++seed) {
		auto g = oracles::random_graph(6, 0.35, seed);
		for (std::uint64_t k = 0; k <= 4; ++k) {
			auto inst = vc_instance(g, k);
			auto r = kernel->reduce(inst);
			CHECK(kernel->lift(r.context, kernel->count_reduced(r)) == oracles::count_vertex_covers(g, k));
		}
	}
}

TEST_CASE("minimal cover kernel")
{
	auto star = minimal_vc_reduce(minimal_vc_instance(testutil::star(3), 3));
	CHECK(star.branch == Branch::normal);
	CHECK(minimal_vc_lift(star.branch, oracles::count_minimal_vertex_covers(star.reduced.graph, star.reduced.k)) == 2);

	auto empty = minimal_vc_reduce(minimal_vc_instance(Graph(5), 0));
	CHECK(empty.reduced.graph.n() == 0);
	CHECK(minimal_vc_lift(empty.branch, oracles::count_minimal_vertex_covers(empty.reduced.graph, empty.reduced.k)) == 1);

	auto none = minimal_vc_reduce(minimal_vc_instance(testutil::complete(4), 1));
	CHECK(none.branch == Branch::zero);
	CHECK(none.reduced.graph == zero_instance());
	CHECK(minimal_vc_lift(none.branch, 5) == 0);

	for (std::uint64_t seed = 0; seed < 40; ++seed) {
		auto g = oracles::random_graph(7, 0.3, seed);
		for (std::uint64_t k = 0; k <= 4; ++k) {
			auto r = minimal_vc_reduce(minimal_vc_instance(g, k));
			auto x = oracles::count_minimal_vertex_covers(r.reduced.graph, r.reduced.k);
			CHECK(minimal_vc_lift(r.branch, x) == oracles::count_minimal_vertex_covers(g, k));
			if (r.branch == Branch::normal) {
				CHECK(r.reduced.k <= k);
				CHECK(r.reduced.graph.m() <= k * k);
				CHECK(r.reduced.graph.n() <= 2 * k * k);
			}
		}
	}
}
