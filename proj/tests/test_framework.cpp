#include <doctest.h>

#include <algorithm>

#include "countkern/errors.hpp"
#include "countkern/framework.hpp"
#include "helpers.hpp"

using namespace countkern;
using testutil::make;

TEST_CASE("problem and parameter names round trip")
{
	for (auto p : {Problem::vertex_cover, Problem::minimal_vertex_cover, Problem::odd_cycle_transversal, Problem::min_st_cut})
		CHECK(problem_from_string(to_string(p)) == p);
	for (auto k : {ParamKind::solution_size, ParamKind::min_cut_size, ParamKind::treewidth, ParamKind::k_minus_matching,
	               ParamKind::k_minus_lp})
		CHECK(param_kind_from_string(to_string(k)) == k);
	CHECK_THROWS_AS(problem_from_string("clique"), ParseError);
	CHECK_THROWS_AS(param_kind_from_string("depth"), ParseError);
}

TEST_CASE("instance checks")
{
	CHECK_NOTHROW(check_instance(vc_instance(testutil::path(3), 1)));
	auto bad = vc_instance(testutil::path(3), 1);
	bad.terminals = TerminalPair{0, 2};
	CHECK_THROWS_AS(check_instance(bad), PreconditionError);
	auto cut = min_cut_instance(testutil::path(3), {0, 2});
	CHECK(cut.k == 1);
	CHECK(cut.param_kind == ParamKind::min_cut_size);
	cut.terminals.reset();
	CHECK_THROWS_AS(check_instance(cut), PreconditionError);
}

TEST_CASE("parameter values")
{
	auto inst = vc_instance(testutil::cycle(5), 4);
	CHECK(parameter_value(inst) == oracles::HalfInteger{8});
	inst.param_kind = ParamKind::k_minus_lp;
	CHECK(parameter_value(inst).str() == "3/2");
	inst.param_kind = ParamKind::k_minus_matching;
	CHECK(parameter_value(inst) == oracles::HalfInteger{4});
	inst.k = 1;
	CHECK(parameter_value(inst) == oracles::HalfInteger{0});
}

TEST_CASE("identity compression")
{
	auto id = identity_compression(Problem::vertex_cover);
	CHECK(id->name() == "identity-vc");
	auto inst = vc_instance(testutil::complete(3), 2);
	auto r = id->reduce(inst);
	CHECK(r.reduced.graph == inst.graph);
	CHECK(r.reduced.k == inst.k);
	CHECK(id->lift(r.context, 3) == 3);
	CHECK(run_compression(*id, inst, 17) == 17);

	LiftContext foreign{"vc-kernel", 1, nlohmann::json::object()};
	CHECK_THROWS_AS(id->lift(foreign, 3), ProtocolError);
	LiftContext future = r.context;
	future.version = 2;
	CHECK_THROWS_AS(id->lift(future, 3), ProtocolError);
}

TEST_CASE("kernels through the generic interface")
{
	const auto &reg = registry();
	auto vc = reg.get("vc-kernel");
	auto inst = vc_instance(testutil::complete(3), 2);
	auto r = vc->reduce(inst);
	CHECK(vc->lift(r.context, vc->count_reduced(r)) == 3);

	auto minvc = reg.get("minvc-kernel");
	auto star = minimal_vc_instance(testutil::star(3), 3);
	auto rm = minvc->reduce(star);
	CHECK(minvc->lift(rm.context, oracle_count(rm.reduced)) == 2);
}

TEST_CASE("composition requires matching problems")
{
	const auto &reg = registry();
	CHECK_THROWS_AS(compose_ppt_compression(reg.get("mincut-oct"), reg.get("vc-kernel")), CompositionError);
	CHECK_THROWS_AS(compose_ppt_compression(nullptr, reg.get("vc-kernel")), CompositionError);
	CHECK_THROWS_AS(compose_ppt_compression(reg.get("oct-vc"), nullptr), CompositionError);
	auto c = compose_ppt_compression(reg.get("mincut-oct"), reg.get("identity-oct"));
	CHECK(c->name() == "mincut-oct+identity-oct");
	CHECK(c->source() == Problem::min_st_cut);
	CHECK(c->target() == Problem::odd_cycle_transversal);
}

TEST_CASE("composing with an identity preserves results")
{
	const auto &reg = registry();
	auto ppt = reg.get("mincut-oct");
	auto composed = compose_ppt_compression(ppt, identity_compression(Problem::odd_cycle_transversal));
	for (std::uint64_t seed = 0; seed < 12; ++seed) {
		auto g = oracles::random_graph(4, 0.6, seed);
		auto inst = min_cut_instance(g, {0, 3});
		auto a = ppt->reduce(inst);
		auto b = composed->reduce(inst);
		CHECK(a.reduced.graph == b.reduced.graph);
		CHECK(a.reduced.k == b.reduced.k);
		auto count = oracle_count(a.reduced);
		CHECK(ppt->lift(a.context, count) == composed->lift(b.context, count));
		CHECK(composed->lift(b.context, count) == oracle_count(inst));
	}
}

TEST_CASE("composite contexts refuse foreign inner contexts")
{
	const auto &reg = registry();
	auto composed = reg.get("mincut-oct+identity-oct");
	auto r = composed->reduce(min_cut_instance(testutil::path(3), {0, 2}));
	auto ctx = r.context;
	ctx.payload["inner"]["compression"] = "identity-vc";
	CHECK_THROWS_AS(composed->lift(ctx, 2), ProtocolError);
}

TEST_CASE("lift contexts serialize")
{
	LiftContext ctx{"vc-kernel", 1, {{"n1", "12"}, {"branch", "normal"}}};
	auto again = LiftContext::parse(ctx.dump());
	CHECK(again == ctx);
	CHECK(again.dump() == ctx.dump());
	CHECK_THROWS_AS(LiftContext::parse("{\"version\": 1}"), ParseError);
	CHECK_THROWS_AS(LiftContext::parse("not json"), ParseError);
}

TEST_CASE("registry contents")
{
	auto names = registry().names();
	for (const char *n : {"identity-vc", "identity-minvc", "identity-oct", "identity-mincut", "vc-kernel", "minvc-kernel",
	                      "mincut-oct", "oct-vc", "oct-vc-nice", "mincut-oct+oct-vc"})
		CHECK(std::find(names.begin(), names.end(), n) != names.end());
	CHECK(registry().find("nope") == nullptr);
	CHECK_THROWS_AS(registry().get("nope"), PreconditionError);
	Registry local;
	local.add(identity_compression(Problem::vertex_cover));
	CHECK_THROWS_AS(local.add(identity_compression(Problem::vertex_cover)), CompositionError);
}

TEST_CASE("verification harness")
{
	auto report = verify_compression(*registry().get("vc-kernel"), vc_instance(testutil::cycle(5), 3));
	CHECK(report.pass);
	CHECK(report.direct == report.lifted);
	CHECK(report.original_vertices == 5);

	auto pipeline = registry().get("mincut-oct+oct-vc");
	auto rep = verify_compression(*pipeline, min_cut_instance(make(2, {{0, 1}}), {0, 1}));
	CHECK(rep.pass);
	CHECK(rep.direct == 1);

	Graph matching(60);
	for (Vertex v = 0; v < 60; v += 2)
		matching.add_edge(v, v + 1);
	CHECK_THROWS_AS(verify_compression(*identity_compression(Problem::vertex_cover), vc_instance(matching, 30)), SizeError);
}
