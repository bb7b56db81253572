#include "countkern/compositions.hpp"

#include <algorithm>

#include "countkern/errors.hpp"
#include "countkern/oracles.hpp"

namespace countkern::compose {

namespace {

std::uint64_t common_cut_size(std::span<const StInstance> instances, const char *what)
{
	if (instances.empty())
		throw CompositionError(std::string(what) + " needs at least one instance");
	auto groups = group_by_min_cut(instances);
	if (groups.size() != 1) {
		std::string sizes;
		for (const auto &[k, members] : groups)
			sizes += (sizes.empty() ? "" : ", ") + std::to_string(k);
		throw CompositionError(std::string(what) + " needs equal minimum cut sizes, got {" + sizes + "}");
	}
	return groups.begin()->first;
}

std::uint64_t json_uint(const nlohmann::json &j, const char *key)
{
	if (!j.contains(key) || !j.at(key).is_number_unsigned())
		throw ParseError(std::string("exact metadata: field '") + key + "' must be a nonnegative integer");
	return j.at(key).get<std::uint64_t>();
}

} // namespace

std::map<std::uint64_t, std::vector<std::size_t>> group_by_min_cut(std::span<const StInstance> instances)
{
	std::map<std::uint64_t, std::vector<std::size_t>> out;
	for (std::size_t i = 0; i < instances.size(); ++i)
		out[oracles::min_cut_size(instances[i].first, instances[i].second)].push_back(i);
	return out;
}

SumComposition sum_compose(std::span<const StInstance> instances)
{
	const auto k = common_cut_size(instances, "sum composition");
	if (k == 0 && instances.size() > 1)
		throw CompositionError("sum composition of separated instances has one minimum cut, not one per input");
	auto chain = chain_identify(instances);
	return {std::move(chain.graph), chain.terminals, k, std::move(chain.vertex_maps)};
}

MinCutToOct ppt_mincut_to_oct(const CountingInstance &inst)
{
	if (inst.problem != Problem::min_st_cut)
		throw PreconditionError(std::string("mincut-oct expects a mincut instance, got ") + to_string(inst.problem));
	check_instance(inst);
	const auto st = *inst.terminals;
	const auto comp = connected_components(inst.graph);
	MinCutToOct out;
	if (comp[st.s] != comp[st.t]) {
		out.branch = "separated";
		out.reduced = oct_instance(Graph(1), 0);
		return out;
	}

	std::vector<Vertex> keep;
	for (Vertex v = 0; v < inst.graph.n(); ++v)
		if (comp[v] == comp[st.s])
			keep.push_back(v);
	std::vector<std::optional<Vertex>> map;
	const auto h = induced_subgraph(inst.graph, keep, &map);
	const TerminalPair hst{*map[st.s], *map[st.t]};
	const auto k = oracles::min_cut_size(h, hst);

	auto sub = subdivide_all_edges(h);
	std::vector<Vertex> originals(h.n());
	for (Vertex v = 0; v < h.n(); ++v)
		originals[v] = v;
	auto blow = false_twin_blowup(sub.graph, originals, k + 1);
	Graph g = std::move(blow.graph);
	const auto first = g.add_vertices(2 * (k + 1));
	for (std::uint64_t j = 0; j <= k; ++j) {
		const auto xj = static_cast<Vertex>(first + 2 * j);
		const auto yj = xj + 1;
		g.add_edge(xj, yj);
		for (auto c : blow.copies[hst.s])
			g.add_edge(xj, c);
		for (auto c : blow.copies[hst.t])
			g.add_edge(yj, c);
		out.x.push_back(xj);
		out.y.push_back(yj);
	}
	out.branch = "normal";
	out.cut_size = k;
	out.copies = std::move(blow.copies);
	out.reduced = oct_instance(std::move(g), k);
	return out;
}

CountingInstance ppt_oct_to_vc(const CountingInstance &inst, bool check_nice)
{
	if (inst.problem != Problem::odd_cycle_transversal)
		throw PreconditionError(std::string("oct-vc expects an oct instance, got ") + to_string(inst.problem));
	check_instance(inst);
	if (check_nice && !oracles::is_nice_oct_instance(inst.graph, inst.k))
		throw PreconditionError("oct instance is not nice");
	const auto n = inst.graph.n();
	Graph g(2 * n);
	for (const auto &e : inst.graph.edges()) {
		g.add_edge(e.u, e.v);
		g.add_edge(static_cast<Vertex>(e.u + n), static_cast<Vertex>(e.v + n));
	}
	for (Vertex v = 0; v < n; ++v)
		g.add_edge(v, static_cast<Vertex>(v + n));
	auto out = vc_instance(std::move(g), n + inst.k);
	out.param_kind = ParamKind::k_minus_lp;
	return out;
}

BigCount oct_vc_lift(const BigCount &vc_count)
{
	if (vc_count < 0 || boost::multiprecision::bit_test(vc_count, 0))
		throw IntegrityError("vertex cover count " + to_decimal(vc_count) + " is not twice a transversal count");
	return vc_count >> 1;
}

namespace {

class MinCutOctPpt final : public Compression {
public:
	std::string name() const override { return "mincut-oct"; }
	Problem source() const override { return Problem::min_st_cut; }
	Problem target() const override { return Problem::odd_cycle_transversal; }
	bool is_ppt() const override { return true; }

	CompressionResult reduce(const CountingInstance &inst) const override
	{
		auto r = ppt_mincut_to_oct(inst);
		nlohmann::json payload = {{"branch", r.branch}, {"k", std::to_string(r.cut_size)}};
		return {std::move(r.reduced), LiftContext{name(), 1, std::move(payload)}};
	}

	BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const override
	{
		expect_context(ctx);
		return reduced_count;
	}
};

class OctVcPpt final : public Compression {
public:
	explicit OctVcPpt(bool check_nice) : check_nice_(check_nice) {}

	std::string name() const override { return check_nice_ ? "oct-vc-nice" : "oct-vc"; }
	Problem source() const override { return Problem::odd_cycle_transversal; }
	Problem target() const override { return Problem::vertex_cover; }
	bool is_ppt() const override { return true; }

	CompressionResult reduce(const CountingInstance &inst) const override
	{
		auto reduced = ppt_oct_to_vc(inst, check_nice_);
		nlohmann::json payload = {{"n", std::to_string(inst.graph.n())}, {"k", std::to_string(inst.k)}};
		return {std::move(reduced), LiftContext{name(), 1, std::move(payload)}};
	}

	BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const override
	{
		expect_context(ctx);
		return oct_vc_lift(reduced_count);
	}

private:
	bool check_nice_;
};

} // namespace

CompressionHandle mincut_to_oct()
{
	return std::make_shared<MinCutOctPpt>();
}

CompressionHandle oct_to_vc(bool check_nice)
{
	return std::make_shared<OctVcPpt>(check_nice);
}

nlohmann::json ExactMetadata::to_json() const
{
	nlohmann::json j = {{"branch", branch}, {"ell", ell}, {"m", m}, {"k", k}, {"exponents", exponents}};
	if (branch == "trivial") {
		auto answers = nlohmann::json::array();
		for (const auto &a : recorded_answers)
			answers.push_back(to_decimal(a));
		j["recorded_answers"] = std::move(answers);
	}
	return j;
}

ExactMetadata ExactMetadata::from_json(const nlohmann::json &j)
{
	if (!j.is_object() || !j.contains("branch") || !j.at("branch").is_string())
		throw ParseError("exact metadata: missing branch");
	ExactMetadata meta;
	meta.branch = j.at("branch").get<std::string>();
	if (meta.branch != "gadget" && meta.branch != "trivial")
		throw ParseError("exact metadata: unknown branch '" + meta.branch + "'");
	meta.ell = json_uint(j, "ell");
	meta.m = json_uint(j, "m");
	meta.k = json_uint(j, "k");
	if (!j.contains("exponents") || !j.at("exponents").is_array())
		throw ParseError("exact metadata: exponents must be an array");
	for (const auto &e : j.at("exponents")) {
		if (!e.is_number_unsigned())
			throw ParseError("exact metadata: exponents must be nonnegative integers");
		meta.exponents.push_back(e.get<std::uint64_t>());
	}
	if (meta.branch == "trivial") {
		if (!j.contains("recorded_answers") || !j.at("recorded_answers").is_array())
			throw ParseError("exact metadata: trivial branch needs recorded_answers");
		for (const auto &a : j.at("recorded_answers")) {
			if (!a.is_string())
				throw ParseError("exact metadata: recorded answers are decimal strings");
			meta.recorded_answers.push_back(parse_decimal(a.get<std::string>()));
		}
		if (meta.recorded_answers.size() != meta.ell)
			throw IntegrityError("exact metadata: recorded answers do not match ell");
		return meta;
	}
	if (meta.exponents.size() != meta.ell)
		throw IntegrityError("exact metadata: exponent count does not match ell");
	for (std::uint64_t i = 0; i < meta.ell; ++i)
		if (meta.exponents[i] != meta.m * i + meta.m * (meta.ell - 1))
			throw IntegrityError("exact metadata: exponent " + std::to_string(i + 1) + " inconsistent with m and ell");
	return meta;
}

ExactComposition exact_compose(std::span<const StInstance> instances)
{
	std::vector<TreeDecomposition> tds;
	tds.reserve(instances.size());
	for (const auto &[g, st] : instances) {
		if (g.n() <= oracles::kTreewidthMaxVertices)
			tds.push_back(oracles::exact_treewidth(g).witness);
		else
			tds.push_back(oracles::heuristic_tree_decomposition(g));
	}
	return exact_compose(instances, tds);
}

ExactComposition exact_compose(std::span<const StInstance> instances, std::span<const TreeDecomposition> decompositions)
{
	const auto k = common_cut_size(instances, "exact composition");
	if (decompositions.size() != instances.size())
		throw CompositionError("exact composition needs one tree decomposition per input");

	std::uint64_t max_edges = 0;
	std::size_t max_width = 0;
	for (std::size_t i = 0; i < instances.size(); ++i) {
		max_edges = std::max<std::uint64_t>(max_edges, instances[i].first.m());
		max_width = std::max(max_width, decompositions[i].width());
	}
	const std::uint64_t ell = instances.size();

	ExactComposition out;
	out.width_bound = std::max<std::size_t>(2, max_width + 1);
	out.meta.ell = ell;
	out.meta.m = 2 * max_edges;
	out.meta.k = k;

	if (max_edges < 64 && ell >= (std::uint64_t{1} << max_edges)) {
		out.meta.branch = "trivial";
		for (const auto &[g, st] : instances)
			out.meta.recorded_answers.push_back(oracles::count_min_st_cuts(g, st).count);
		out.graph = Graph(2);
		out.graph.add_edge(0, 1);
		out.terminals = {0, 1};
		out.witness.bags = {{0, 1}};
		return out;
	}

	const std::uint64_t m = out.meta.m;
	const std::uint64_t paths = m * (ell - 1);
	out.meta.branch = "gadget";
	for (std::uint64_t i = 0; i < ell; ++i)
		out.meta.exponents.push_back(m * i + m * (ell - 1));

	auto chain = chain_identify(instances);
	Graph &g = chain.graph;
	auto &bags = out.witness.bags;
	auto &tree = out.witness.tree_edges;
	std::optional<std::size_t> previous_anchor;

	for (std::uint64_t i = 0; i < ell; ++i) {
		const auto &map = chain.vertex_maps[i];
		const auto &[gi, sti] = instances[i];
		const Vertex s = map[sti.s];
		const Vertex t = map[sti.t];
		out.copy_terminals.push_back({s, t});

		const std::size_t offset = bags.size();
		std::optional<std::size_t> anchor;
		for (const auto &bag : decompositions[i].bags) {
			std::vector<Vertex> mapped;
			for (auto v : bag) {
				if (v >= gi.n())
					throw PreconditionError("input tree decomposition references vertex " + std::to_string(v));
				mapped.push_back(map[v]);
			}
			if (!anchor && std::find(mapped.begin(), mapped.end(), s) != mapped.end())
				anchor = bags.size();
			if (std::find(mapped.begin(), mapped.end(), t) == mapped.end())
				mapped.push_back(t);
			bags.push_back(std::move(mapped));
		}
		for (const auto &[a, b] : decompositions[i].tree_edges)
			tree.emplace_back(offset + a, offset + b);
		if (!anchor) {
			anchor = bags.size();
			bags.push_back({s, t});
			if (bags.size() - 1 > offset)
				tree.emplace_back(offset, *anchor);
		}
		if (previous_anchor)
			tree.emplace_back(*previous_anchor, *anchor);
		previous_anchor = anchor;

		for (std::uint64_t j = 0; j < paths; ++j) {
			const bool long_path = j < m * i;
			const Vertex x = g.add_vertices(long_path ? 3 : 1);
			const std::size_t a = bags.size();
			bags.push_back({s, x, t});
			tree.emplace_back(*anchor, a);
			g.add_edge(s, x);
			if (!long_path) {
				g.add_edge(x, t);
				continue;
			}
			const Vertex y = x + 1;
			const Vertex z = x + 2;
			g.add_edge(x, y);
			g.add_edge(y, z);
			g.add_edge(z, t);
			bags.push_back({x, y, t});
			tree.emplace_back(a, a + 1);
			bags.push_back({y, z, t});
			tree.emplace_back(a + 1, a + 2);
		}
	}

	out.graph = std::move(g);
	out.terminals = chain.terminals;
	const auto check = validate_tree_decomposition(out.graph, out.witness);
	if (!check.valid)
		throw IntegrityError(std::string("composed tree decomposition invalid: ") + to_string(check.violation) + " " + check.detail);
	if (out.witness.width() > out.width_bound)
		throw IntegrityError("composed tree decomposition has width " + std::to_string(out.witness.width()) + " above bound " +
		                     std::to_string(out.width_bound));
	return out;
}

std::vector<BigCount> exact_extract(const ExactMetadata &meta, const BigCount &q)
{
	if (meta.branch == "trivial")
		return meta.recorded_answers;
	if (meta.exponents.size() != meta.ell)
		throw IntegrityError("exact metadata: exponent count does not match ell");
	std::vector<BigCount> out(meta.ell);
	BigCount rest = q;
	for (std::uint64_t i = meta.ell; i-- > 0;) {
		const auto weight = pow2(meta.exponents[i]);
		out[i] = rest / weight;
		rest -= out[i] * weight;
	}
	if (!rest.is_zero())
		throw IntegrityError("composed count " + to_decimal(q) + " leaves residual " + to_decimal(rest));
	return out;
}

BigCount exact_combine(const ExactMetadata &meta, std::span<const BigCount> counts)
{
	if (counts.size() != meta.exponents.size())
		throw DomainError("exact_combine: one count per exponent required");
	BigCount q = 0;
	for (std::size_t i = 0; i < counts.size(); ++i)
		q += counts[i] * pow2(meta.exponents[i]);
	return q;
}

} // namespace countkern::compose
