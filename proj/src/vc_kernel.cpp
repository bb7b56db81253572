#include "countkern/vc_kernel.hpp"

#include <algorithm>
#include <limits>

#include "countkern/errors.hpp"
#include "countkern/oracles.hpp"

namespace countkern::vc {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
	unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
	if (r > kU64Max)
		throw DomainError("parameter arithmetic overflows 64 bits");
	return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
	if (a > kU64Max - b)
		throw DomainError("parameter arithmetic overflows 64 bits");
	return a + b;
}

/// Rows 0..rows of M restricted to columns 0..cols.
std::vector<std::vector<BigCount>> spread_table(std::uint64_t d, std::uint64_t rows, std::uint64_t cols, BinomialTable &binom)
{
	const auto weights = binom.row(d, d == 0 ? 0 : d - 1);
	std::vector<std::vector<BigCount>> m(rows + 1, std::vector<BigCount>(cols + 1));
	m[0][0] = 1;
	if (d == 0)
		return m;
	for (std::uint64_t l = 1; l <= rows; ++l) {
		const std::uint64_t reach = std::min(cols, checked_mul(l, d - 1));
		for (std::uint64_t p = 0; p <= reach; ++p) {
			BigCount acc = 0;
			for (std::uint64_t s = 0; s <= std::min(p, d - 1); ++s)
				if (!m[l - 1][p - s].is_zero())
					acc += weights[s] * m[l - 1][p - s];
			m[l][p] = std::move(acc);
		}
	}
	return m;
}

void check_wi_domain(std::uint64_t i, std::uint64_t k2, std::uint64_t n2)
{
	if (i > k2 || i > n2)
		throw DomainError("w_i needs i <= k2 and i <= n2 (i=" + std::to_string(i) + ", k2=" + std::to_string(k2) +
		                  ", n2=" + std::to_string(n2) + ")");
}

std::uint64_t payload_number(const nlohmann::json &payload, const char *key)
{
	if (!payload.contains(key) || !payload.at(key).is_string())
		throw ParseError(std::string("vc-kernel context: field '") + key + "' must be a decimal string");
	auto value = parse_decimal(payload.at(key).get<std::string>());
	if (value > kU64Max)
		throw ParseError(std::string("vc-kernel context: field '") + key + "' out of range");
	return static_cast<std::uint64_t>(value);
}

void require_vc(const CountingInstance &inst, Problem expected)
{
	if (inst.problem != expected)
		throw PreconditionError(std::string("expected a ") + to_string(expected) + " instance, got " + to_string(inst.problem));
	if (inst.param_kind != ParamKind::solution_size)
		throw PreconditionError(std::string("kernel expects parameter solution-size, got ") + to_string(inst.param_kind));
	check_instance(inst);
}

/// (G2, k2, n1) or nothing when no vertex cover of size <= k exists.
std::optional<Stripped> normalize(const Graph &g, std::uint64_t k)
{
	auto g1 = buss_reduce(g, k);
	if (!g1)
		return std::nullopt;
	auto s = strip_isolated(g1->graph, g1->k);
	const auto m = static_cast<unsigned __int128>(s.graph.m());
	if (m > static_cast<unsigned __int128>(s.k2) * s.k2)
		return std::nullopt;
	return s;
}

} // namespace

std::optional<BussResult> buss_reduce(const Graph &g, std::uint64_t k)
{
	const auto n = g.n();
	std::vector<std::size_t> degree(n);
	for (Vertex v = 0; v < n; ++v)
		degree[v] = g.degree(v);
	std::vector<char> removed(n, 0);
	bool changed = true;
	while (changed) {
		changed = false;
		for (Vertex v = 0; v < n; ++v) {
			if (removed[v] || degree[v] <= k)
				continue;
			if (k == 0)
				return std::nullopt;
			removed[v] = 1;
			--k;
			for (auto w : g.neighbors(v))
				if (!removed[w])
					--degree[w];
			changed = true;
		}
	}
	BussResult out;
	for (Vertex v = 0; v < n; ++v)
		if (!removed[v])
			out.kept.push_back(v);
	out.graph = induced_subgraph(g, out.kept);
	out.k = k;
	return out;
}

Stripped strip_isolated(const Graph &g1, std::uint64_t k1)
{
	std::vector<Vertex> keep;
	for (Vertex v = 0; v < g1.n(); ++v)
		if (g1.degree(v) > 0)
			keep.push_back(v);
	return {induced_subgraph(g1, keep), k1, g1.n()};
}

std::uint64_t padding_size(std::uint64_t d, std::uint64_t k2)
{
	const auto dk = checked_mul(d, k2);
	return checked_add(checked_add(d, dk), checked_mul(2, checked_mul(dk, dk)));
}

G3 build_g3(const Graph &g2, std::uint64_t k2)
{
	const std::uint64_t d = g2.n();
	return build_g3(g2, k2, d, padding_size(d, k2));
}

G3 build_g3(const Graph &g2, std::uint64_t k2, std::uint64_t d, std::uint64_t t)
{
	const auto total = checked_add(checked_mul(g2.n(), d), t);
	if (total > std::numeric_limits<Vertex>::max())
		throw SizeError("blown-up instance with " + std::to_string(total) + " vertices cannot be materialized");
	G3 out;
	out.graph = d == 0 ? Graph(0) : replicate_all_vertices(g2, d).graph;
	out.graph.add_vertices(t);
	out.d = d;
	out.t = t;
	out.k3 = checked_mul(d, k2);
	return out;
}

nlohmann::json VcLiftContext::to_payload() const
{
	return {
	    {"branch", branch == Branch::normal ? "normal" : "zero"},
	    {"n1", std::to_string(n1)},
	    {"n2", std::to_string(n2)},
	    {"k2", std::to_string(k2)},
	    {"d", std::to_string(d)},
	    {"t", std::to_string(t)},
	    {"k3", std::to_string(k3)},
	};
}

VcLiftContext VcLiftContext::from_payload(const nlohmann::json &payload)
{
	if (!payload.is_object() || !payload.contains("branch") || !payload.at("branch").is_string())
		throw ParseError("vc-kernel context: missing branch");
	VcLiftContext ctx;
	const auto branch = payload.at("branch").get<std::string>();
	if (branch == "normal")
		ctx.branch = Branch::normal;
	else if (branch != "zero")
		throw ParseError("vc-kernel context: unknown branch '" + branch + "'");
	ctx.n1 = payload_number(payload, "n1");
	ctx.n2 = payload_number(payload, "n2");
	ctx.k2 = payload_number(payload, "k2");
	ctx.d = payload_number(payload, "d");
	ctx.t = payload_number(payload, "t");
	ctx.k3 = payload_number(payload, "k3");
	if (ctx.d != ctx.n2 || ctx.n1 < ctx.n2 || ctx.t != padding_size(ctx.d, ctx.k2) || ctx.k3 != checked_mul(ctx.d, ctx.k2))
		throw IntegrityError("vc-kernel context violates d = n2, n1 >= n2, t = d + d*k2 + 2(d*k2)^2 or k3 = d*k2");
	return ctx;
}

Graph zero_instance()
{
	Graph g(2);
	g.add_edge(0, 1);
	return g;
}

VcReduction vc_reduce(const CountingInstance &inst)
{
	require_vc(inst, Problem::vertex_cover);
	auto stripped = normalize(inst.graph, inst.k);
	if (!stripped)
		return {vc_instance(zero_instance(), 0), VcLiftContext{}};
	auto g3 = build_g3(stripped->graph, stripped->k2);
	VcLiftContext ctx{Branch::normal, stripped->n1, stripped->graph.n(), stripped->k2, g3.d, g3.t, g3.k3};
	return {vc_instance(std::move(g3.graph), g3.k3), ctx};
}

BigCount compute_wi(std::uint64_t i, std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2)
{
	check_wi_domain(i, k2, n2);
	const std::uint64_t budget = checked_mul(d, k2 - i);
	const std::uint64_t l = n2 - i;
	BinomialTable binom;
	const auto m = spread_table(d, l, budget, binom);
	const auto pad = binom.row(t, std::min(t, budget));
	BigCount w = 0;
	for (std::uint64_t r = 0; r <= budget; ++r)
		for (std::uint64_t a = 0; a <= std::min(t, r); ++a)
			w += pad[a] * m[l][r - a];
	return w;
}

std::vector<BigCount> compute_all_wi(std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2)
{
	const std::uint64_t imax = std::min(k2, n2);
	const std::uint64_t budget0 = checked_mul(d, k2);
	BinomialTable binom;
	const auto m = spread_table(d, n2, budget0, binom);
	const auto pad = binom.row(t, std::min(t, budget0));
	std::vector<BigCount> w(imax + 1);
	std::vector<BigCount> prefix;
	for (std::uint64_t i = 0; i <= imax; ++i) {
		const auto &row = m[n2 - i];
		const std::uint64_t budget = d * (k2 - i);
		prefix.assign(budget + 1, 0);
		BigCount run = 0;
		for (std::uint64_t p = 0; p <= budget; ++p) {
			run += row[p];
			prefix[p] = run;
		}
		BigCount acc = 0;
		for (std::uint64_t a = 0; a <= std::min(t, budget); ++a)
			acc += pad[a] * prefix[budget - a];
		w[i] = std::move(acc);
	}
	return w;
}

BigCount vc_lift(const VcLiftContext &ctx, const BigCount &x3)
{
	if (ctx.branch == Branch::zero)
		return 0;
	if (x3 < 0)
		throw IntegrityError("negative reduced count");
	const auto w = compute_all_wi(ctx.d, ctx.t, ctx.k2, ctx.n2);
	BinomialTable binom;
	const auto pads = binom.row(ctx.n1 - ctx.n2, ctx.k2);
	BigCount rest = x3;
	BigCount z = 0;
	BigCount pad_sum = 0;
	std::vector<BigCount> prefix(ctx.k2 + 1);
	for (std::uint64_t j = 0; j <= ctx.k2; ++j) {
		pad_sum += pads[j];
		prefix[j] = pad_sum;
	}
	for (std::uint64_t i = 0; i <= ctx.k2; ++i) {
		if (i > ctx.n2)
			continue;
		if (w[i].is_zero())
			throw IntegrityError("w_" + std::to_string(i) + " vanishes; context is inconsistent");
		BigCount y = rest / w[i];
		rest -= y * w[i];
		z += y * prefix[ctx.k2 - i];
	}
	if (!rest.is_zero())
		throw IntegrityError("reduced count " + to_decimal(x3) + " leaves residual " + to_decimal(rest));
	return z;
}

BigCount reduced_count_by_partition(const Graph &g2, std::uint64_t d, std::uint64_t t, std::uint64_t k2)
{
	const auto n2 = static_cast<std::uint64_t>(g2.n());
	const auto y = oracles::count_vertex_covers_by_size(g2, std::min(k2, n2));
	const auto w = compute_all_wi(d, t, k2, n2);
	BigCount x = 0;
	for (std::size_t i = 0; i < w.size(); ++i)
		x += y[i] * w[i];
	return x;
}

Graph g2_from_g3(const Graph &g3, const VcLiftContext &ctx)
{
	if (ctx.branch != Branch::normal)
		throw PreconditionError("zero-branch instances carry no g2");
	if (g3.n() != checked_add(checked_mul(ctx.n2, ctx.d), ctx.t))
		throw ProtocolError("graph does not have the layout recorded in the context");
	std::vector<Vertex> firsts(ctx.n2);
	for (std::uint64_t v = 0; v < ctx.n2; ++v)
		firsts[v] = static_cast<Vertex>(v * ctx.d);
	return induced_subgraph(g3, firsts);
}

MinimalReduction minimal_vc_reduce(const CountingInstance &inst)
{
	require_vc(inst, Problem::minimal_vertex_cover);
	auto stripped = normalize(inst.graph, inst.k);
	if (!stripped)
		return {minimal_vc_instance(zero_instance(), 0), Branch::zero};
	return {minimal_vc_instance(std::move(stripped->graph), stripped->k2), Branch::normal};
}

BigCount minimal_vc_lift(Branch branch, const BigCount &x)
{
	return branch == Branch::zero ? BigCount(0) : x;
}

namespace {

class VcKernel final : public Compression {
public:
	std::string name() const override { return "vc-kernel"; }
	Problem source() const override { return Problem::vertex_cover; }
	Problem target() const override { return Problem::vertex_cover; }

	CompressionResult reduce(const CountingInstance &inst) const override
	{
		auto r = vc_reduce(inst);
		return {std::move(r.reduced), LiftContext{name(), 1, r.context.to_payload()}};
	}

	BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const override
	{
		expect_context(ctx);
		return vc_lift(VcLiftContext::from_payload(ctx.payload), reduced_count);
	}

	BigCount count_reduced(const CompressionResult &result) const override
	{
		expect_context(result.context);
		auto ctx = VcLiftContext::from_payload(result.context.payload);
		if (ctx.branch == Branch::zero)
			return oracle_count(result.reduced);
		if (result.reduced.k != ctx.k3)
			throw ProtocolError("reduced budget differs from the recorded k3");
		return reduced_count_by_partition(g2_from_g3(result.reduced.graph, ctx), ctx.d, ctx.t, ctx.k2);
	}
};

class MinimalVcKernel final : public Compression {
public:
	std::string name() const override { return "minvc-kernel"; }
	Problem source() const override { return Problem::minimal_vertex_cover; }
	Problem target() const override { return Problem::minimal_vertex_cover; }

	CompressionResult reduce(const CountingInstance &inst) const override
	{
		auto r = minimal_vc_reduce(inst);
		nlohmann::json payload = {{"branch", r.branch == Branch::normal ? "normal" : "zero"}};
		return {std::move(r.reduced), LiftContext{name(), 1, std::move(payload)}};
	}

	BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const override
	{
		expect_context(ctx);
		const auto &b = ctx.payload.contains("branch") ? ctx.payload.at("branch") : nlohmann::json();
		if (b == "normal")
			return minimal_vc_lift(Branch::normal, reduced_count);
		if (b == "zero")
			return minimal_vc_lift(Branch::zero, reduced_count);
		throw ParseError("minvc-kernel context: missing or unknown branch");
	}
};

} // namespace

CompressionHandle vc_kernel()
{
	return std::make_shared<VcKernel>();
}

CompressionHandle minimal_vc_kernel()
{
	return std::make_shared<MinimalVcKernel>();
}

} // namespace countkern::vc
