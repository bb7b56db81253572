#include "countkern/framework.hpp"

#include <utility>

#include "countkern/errors.hpp"

namespace countkern {

namespace {

struct Names {
	const char *problem[4] = {"vc", "minvc", "oct", "mincut"};
	const char *param[5] = {"solution-size", "min-cut-size", "treewidth", "k-minus-matching", "k-minus-lp"};
};

constexpr Names kNames;

bool is_vertex_subset_problem(Problem p)
{
	return p != Problem::min_st_cut;
}

} // namespace

const char *to_string(Problem p)
{
	return kNames.problem[static_cast<int>(p)];
}

const char *to_string(ParamKind p)
{
	return kNames.param[static_cast<int>(p)];
}

Problem problem_from_string(const std::string &s)
{
	for (int i = 0; i < 4; ++i)
		if (s == kNames.problem[i])
			return static_cast<Problem>(i);
	throw ParseError("unknown problem '" + s + "'");
}

ParamKind param_kind_from_string(const std::string &s)
{
	for (int i = 0; i < 5; ++i)
		if (s == kNames.param[i])
			return static_cast<ParamKind>(i);
	throw ParseError("unknown parameter kind '" + s + "'");
}

CountingInstance vc_instance(Graph g, std::uint64_t k)
{
	return {Problem::vertex_cover, std::move(g), std::nullopt, k, ParamKind::solution_size};
}

CountingInstance minimal_vc_instance(Graph g, std::uint64_t k)
{
	return {Problem::minimal_vertex_cover, std::move(g), std::nullopt, k, ParamKind::solution_size};
}

CountingInstance oct_instance(Graph g, std::uint64_t k)
{
	return {Problem::odd_cycle_transversal, std::move(g), std::nullopt, k, ParamKind::solution_size};
}

CountingInstance min_cut_instance(Graph g, TerminalPair st)
{
	check_terminals(g, st);
	auto k = oracles::min_cut_size(g, st);
	return {Problem::min_st_cut, std::move(g), st, k, ParamKind::min_cut_size};
}

void check_instance(const CountingInstance &inst)
{
	if (is_vertex_subset_problem(inst.problem)) {
		if (inst.terminals)
			throw PreconditionError(std::string(to_string(inst.problem)) + " instance must not carry terminals");
		if (inst.param_kind == ParamKind::min_cut_size)
			throw PreconditionError("min-cut-size parameter on a vertex-subset problem");
		if ((inst.param_kind == ParamKind::k_minus_matching || inst.param_kind == ParamKind::k_minus_lp) &&
		    inst.problem != Problem::vertex_cover)
			throw PreconditionError("above-guarantee parameters apply to vc instances only");
		return;
	}
	if (!inst.terminals)
		throw PreconditionError("mincut instance needs terminals");
	check_terminals(inst.graph, *inst.terminals);
	if (inst.param_kind != ParamKind::min_cut_size && inst.param_kind != ParamKind::treewidth)
		throw PreconditionError(std::string("parameter kind ") + to_string(inst.param_kind) + " does not apply to mincut");
}

oracles::HalfInteger parameter_value(const CountingInstance &inst)
{
	check_instance(inst);
	const auto twice_k = 2 * inst.k;
	switch (inst.param_kind) {
	case ParamKind::solution_size:
		return {twice_k};
	case ParamKind::min_cut_size:
		return {2 * oracles::min_cut_size(inst.graph, *inst.terminals)};
	case ParamKind::treewidth:
		return {2 * oracles::exact_treewidth(inst.graph).width};
	case ParamKind::k_minus_matching: {
		auto mu = 2 * oracles::max_matching_size(inst.graph);
		return {twice_k > mu ? twice_k - mu : 0};
	}
	case ParamKind::k_minus_lp: {
		auto lp = oracles::lp_vc_value(inst.graph).twice;
		return {twice_k > lp ? twice_k - lp : 0};
	}
	}
	throw DomainError("bad parameter kind");
}

BigCount oracle_count(const CountingInstance &inst)
{
	check_instance(inst);
	switch (inst.problem) {
	case Problem::vertex_cover:
		return oracles::count_vertex_covers(inst.graph, inst.k);
	case Problem::minimal_vertex_cover:
		return oracles::count_minimal_vertex_covers(inst.graph, inst.k);
	case Problem::odd_cycle_transversal:
		return oracles::count_odd_cycle_transversals(inst.graph, inst.k);
	case Problem::min_st_cut:
		return oracles::count_min_st_cuts(inst.graph, *inst.terminals).count;
	}
	throw DomainError("bad problem");
}

nlohmann::json LiftContext::to_json() const
{
	return {{"compression", compression}, {"version", version}, {"payload", payload}};
}

LiftContext LiftContext::from_json(const nlohmann::json &j)
{
	if (!j.is_object() || !j.contains("compression") || !j.contains("version") || !j.contains("payload"))
		throw ParseError("lift context needs compression, version and payload");
	LiftContext ctx;
	try {
		ctx.compression = j.at("compression").get<std::string>();
		ctx.version = j.at("version").get<int>();
	} catch (const nlohmann::json::exception &e) {
		throw ParseError(std::string("lift context: ") + e.what());
	}
	ctx.payload = j.at("payload");
	if (!ctx.payload.is_object())
		throw ParseError("lift context payload must be an object");
	return ctx;
}

std::string LiftContext::dump() const
{
	return to_json().dump(2);
}

LiftContext LiftContext::parse(const std::string &text)
{
	nlohmann::json j;
	try {
		j = nlohmann::json::parse(text);
	} catch (const nlohmann::json::parse_error &e) {
		throw ParseError(std::string("lift context: ") + e.what());
	}
	return from_json(j);
}

BigCount Compression::count_reduced(const CompressionResult &result) const
{
	return oracle_count(result.reduced);
}

void Compression::expect_context(const LiftContext &ctx, int version) const
{
	if (ctx.compression != name())
		throw ProtocolError("context written by '" + ctx.compression + "' handed to '" + name() + "'");
	if (ctx.version != version)
		throw ProtocolError(name() + ": unsupported context version " + std::to_string(ctx.version));
}

namespace {

class Identity final : public Compression {
public:
	explicit Identity(Problem p) : problem_(p) {}

	std::string name() const override { return std::string("identity-") + to_string(problem_); }
	Problem source() const override { return problem_; }
	Problem target() const override { return problem_; }

	CompressionResult reduce(const CountingInstance &inst) const override
	{
		if (inst.problem != problem_)
			throw PreconditionError(name() + " got a " + to_string(inst.problem) + " instance");
		check_instance(inst);
		return {inst, LiftContext{name(), 1, nlohmann::json::object()}};
	}

	BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const override
	{
		expect_context(ctx);
		return reduced_count;
	}

private:
	Problem problem_;
};

class Composite final : public Compression {
public:
	Composite(CompressionHandle ppt, CompressionHandle inner) : ppt_(std::move(ppt)), inner_(std::move(inner)) {}

	std::string name() const override { return ppt_->name() + "+" + inner_->name(); }
	Problem source() const override { return ppt_->source(); }
	Problem target() const override { return inner_->target(); }
	bool is_ppt() const override { return ppt_->is_ppt() && inner_->is_ppt(); }

	CompressionResult reduce(const CountingInstance &inst) const override
	{
		auto outer = ppt_->reduce(inst);
		auto inner = inner_->reduce(outer.reduced);
		nlohmann::json payload = {{"outer", outer.context.to_json()}, {"inner", inner.context.to_json()}};
		return {std::move(inner.reduced), LiftContext{name(), 1, std::move(payload)}};
	}

	BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const override
	{
		auto [outer, inner] = split(ctx);
		return ppt_->lift(outer, inner_->lift(inner, reduced_count));
	}

	BigCount count_reduced(const CompressionResult &result) const override
	{
		auto [outer, inner] = split(result.context);
		return inner_->count_reduced({result.reduced, inner});
	}

private:
	std::pair<LiftContext, LiftContext> split(const LiftContext &ctx) const
	{
		expect_context(ctx);
		if (!ctx.payload.contains("outer") || !ctx.payload.contains("inner"))
			throw ProtocolError(name() + ": context lacks nested contexts");
		return {LiftContext::from_json(ctx.payload.at("outer")), LiftContext::from_json(ctx.payload.at("inner"))};
	}

	CompressionHandle ppt_;
	CompressionHandle inner_;
};

} // namespace

CompressionHandle identity_compression(Problem p)
{
	return std::make_shared<Identity>(p);
}

BigCount run_compression(const Compression &c, const CountingInstance &inst, const BigCount &reduced_count)
{
	auto result = c.reduce(inst);
	return c.lift(result.context, reduced_count);
}

CompressionHandle compose_ppt_compression(CompressionHandle ppt, CompressionHandle c)
{
	if (!ppt || !c)
		throw CompositionError("cannot compose a null handle");
	if (ppt->target() != c->source())
		throw CompositionError(ppt->name() + " produces " + to_string(ppt->target()) + " instances but " + c->name() + " expects " +
		                       to_string(c->source()));
	return std::make_shared<Composite>(std::move(ppt), std::move(c));
}

VerifyReport verify_compression(const Compression &c, const CountingInstance &inst)
{
	VerifyReport report;
	report.compression = c.name();
	report.original_vertices = inst.graph.n();
	report.original_edges = inst.graph.m();
	report.direct = oracle_count(inst);
	auto result = c.reduce(inst);
	report.reduced_vertices = result.reduced.graph.n();
	report.reduced_edges = result.reduced.graph.m();
	report.reduced_count = c.count_reduced(result);
	report.lifted = c.lift(result.context, report.reduced_count);
	report.pass = report.lifted == report.direct;
	return report;
}

void Registry::add(CompressionHandle c)
{
	auto key = c->name();
	if (!entries_.emplace(key, std::move(c)).second)
		throw CompositionError("duplicate registry entry '" + key + "'");
}

CompressionHandle Registry::find(const std::string &name) const
{
	auto it = entries_.find(name);
	return it == entries_.end() ? nullptr : it->second;
}

CompressionHandle Registry::get(const std::string &name) const
{
	if (auto c = find(name))
		return c;
	throw PreconditionError("no compression named '" + name + "'");
}

std::vector<std::string> Registry::names() const
{
	std::vector<std::string> out;
	for (const auto &[key, value] : entries_)
		out.push_back(key);
	return out;
}

} // namespace countkern
