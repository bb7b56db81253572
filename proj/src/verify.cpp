#include "countkern/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "countkern/compositions.hpp"
#include "countkern/errors.hpp"
#include "countkern/framework.hpp"
#include "countkern/oracles.hpp"
#include "countkern/vc_kernel.hpp"

namespace countkern::verify {

namespace {

using Clock = std::chrono::steady_clock;
using compose::StInstance;

std::string describe(const Graph &g)
{
	std::ostringstream out;
	out << "n=" << g.n() << " E={";
	for (std::size_t i = 0; i < g.m(); ++i)
		out << (i ? "," : "") << g.edges()[i].u << '-' << g.edges()[i].v;
	out << '}';
	return out.str();
}

std::string describe(const StInstance &inst)
{
	return describe(inst.first) + " s=" + std::to_string(inst.second.s) + " t=" + std::to_string(inst.second.t);
}

/// Runs check(i) for i in [0, count); an empty string is a pass. Failures and
/// exceptions are recorded, the one with the smallest index is kept.
class Sweep {
public:
	explicit Sweep(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

	void run(std::size_t count, const std::function<std::string(std::size_t)> &check)
	{
		const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
		for (std::int64_t i = 0; i < total; ++i) {
			std::string msg;
			try {
				msg = check(static_cast<std::size_t>(i));
			} catch (const std::exception &e) {
				msg = std::string("exception: ") + e.what();
			}
#pragma omp critical(countkern_sweep)
			record(static_cast<std::size_t>(i), msg);
		}
	}

	void single(const std::function<std::string()> &check)
	{
		std::string msg;
		try {
			msg = check();
		} catch (const std::exception &e) {
			msg = std::string("exception: ") + e.what();
		}
		record(next_single_++, msg);
	}

	SuiteResult finish()
	{
		result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
		return result_;
	}

private:
	void record(std::size_t index, const std::string &msg)
	{
		++result_.cases;
		if (msg.empty())
			return;
		++result_.failures;
		if (msg_index_ > index || result_.first_failure.empty()) {
			msg_index_ = index;
			result_.first_failure = msg;
		}
	}

	SuiteResult result_;
	Clock::time_point start_;
	std::size_t msg_index_ = std::numeric_limits<std::size_t>::max();
	std::size_t next_single_ = std::numeric_limits<std::size_t>::max() / 2;
};

std::string mismatch(const std::string &what, const BigCount &got, const BigCount &want, const std::string &where)
{
	return what + ": got " + to_decimal(got) + ", expected " + to_decimal(want) + " on " + where;
}

/// Random connected graph: random tree plus extra edges, at most max_edges.
Graph random_connected(std::size_t n, std::size_t max_edges, std::mt19937_64 &rng)
{
	Graph g(n);
	std::vector<Vertex> order(n);
	for (Vertex v = 0; v < n; ++v)
		order[v] = v;
	std::shuffle(order.begin(), order.end(), rng);
	for (std::size_t i = 1; i < n; ++i) {
		std::uniform_int_distribution<std::size_t> pick(0, i - 1);
		g.add_edge(order[i], order[pick(rng)]);
	}
	const std::size_t cap = std::min(max_edges, n * (n - 1) / 2);
	std::uniform_int_distribution<std::size_t> extra_count(g.m(), std::max(g.m(), cap));
	const auto target = extra_count(rng);
	std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(n - 1));
	while (g.m() < target) {
		auto a = vertex(rng);
		auto b = vertex(rng);
		if (a != b && !g.has_edge(a, b))
			g.add_edge(a, b);
	}
	return g;
}

StInstance random_st_instance(std::size_t nmin, std::size_t nmax, std::mt19937_64 &rng)
{
	std::uniform_int_distribution<std::size_t> size(nmin, nmax);
	std::uniform_real_distribution<double> density(0.25, 0.75);
	const auto n = size(rng);
	Graph g = oracles::random_graph(n, density(rng), rng());
	std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(n - 1));
	Vertex s = vertex(rng);
	Vertex t = vertex(rng);
	while (t == s)
		t = vertex(rng);
	return {std::move(g), {s, t}};
}

/// Tuples of `ell` instances sharing one cut size, drawn by rejection.
template <class Draw, class Accept>
std::vector<std::vector<StInstance>> draw_tuples(std::size_t trials, std::mt19937_64 &rng, Draw draw_ell, Accept accept,
                                                 std::function<StInstance(std::mt19937_64 &)> draw_instance)
{
	std::vector<std::vector<StInstance>> out;
	while (out.size() < trials) {
		const std::size_t ell = draw_ell(rng);
		std::vector<StInstance> tuple{draw_instance(rng)};
		const auto k = oracles::min_cut_size(tuple[0].first, tuple[0].second);
		for (int attempt = 0; tuple.size() < ell && attempt < 400; ++attempt) {
			auto next = draw_instance(rng);
			if (oracles::min_cut_size(next.first, next.second) == k)
				tuple.push_back(std::move(next));
		}
		if (tuple.size() == ell && accept(tuple, k))
			out.push_back(std::move(tuple));
	}
	return out;
}

std::size_t input_width(const Graph &g)
{
	return oracles::exact_treewidth(g).width;
}

} // namespace

nlohmann::json SuiteResult::to_json() const
{
	nlohmann::json j = {{"name", name}, {"cases", cases}, {"failures", failures}, {"seconds", seconds}, {"pass", passed()}};
	if (!first_failure.empty())
		j["first_failure"] = first_failure;
	return j;
}

std::vector<Graph> all_graphs(std::size_t n)
{
	std::vector<std::pair<Vertex, Vertex>> slots;
	for (Vertex a = 0; a < n; ++a)
		for (Vertex b = a + 1; b < n; ++b)
			slots.emplace_back(a, b);
	if (slots.size() > 24)
		throw SizeError("all_graphs: too many labeled graphs on " + std::to_string(n) + " vertices");
	std::vector<Graph> out;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
		Graph g(n);
		for (std::size_t i = 0; i < slots.size(); ++i)
			if (mask >> i & 1)
				g.add_edge(slots[i].first, slots[i].second);
		out.push_back(std::move(g));
	}
	return out;
}

std::vector<Graph> graph_corpus(std::size_t nmax, std::size_t per_size, std::uint64_t seed)
{
	std::vector<Graph> out;
	for (std::size_t n = 0; n <= std::min<std::size_t>(nmax, 6); ++n) {
		auto graphs = all_graphs(n);
		std::move(graphs.begin(), graphs.end(), std::back_inserter(out));
	}
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> density(0.1, 0.9);
	for (std::size_t n = 7; n <= nmax; ++n)
		for (std::size_t i = 0; i < per_size; ++i)
			out.push_back(oracles::random_graph(n, density(rng), rng()));
	return out;
}

SuiteResult vc_end_to_end(const Options &opt)
{
	Sweep sweep("vc-kernel end-to-end");
	const auto graphs = graph_corpus(opt.nmax, opt.trials, opt.seed);
	const auto kernel = vc::vc_kernel();
	const std::size_t ks = opt.kmax + 1;
	sweep.run(graphs.size() * ks, [&](std::size_t idx) -> std::string {
		const auto &g = graphs[idx / ks];
		const std::uint64_t k = idx % ks;
		auto report = verify_compression(*kernel, vc_instance(g, k));
		if (report.pass)
			return {};
		return mismatch("lifted count", report.lifted, report.direct, describe(g) + " k=" + std::to_string(k));
	});
	return sweep.finish();
}

SuiteResult vc_map_size(const Options &opt)
{
	Sweep sweep("vc-kernel map-size identity");
	struct Case {
		std::size_t graph;
		std::uint64_t k2, d, t;
	};
	std::vector<Graph> graphs;
	for (std::size_t n = 1; n <= std::min<std::size_t>(opt.nmax, 4); ++n)
		for (auto &g : all_graphs(n)) {
			bool isolated = false;
			for (Vertex v = 0; v < g.n(); ++v)
				isolated = isolated || g.degree(v) == 0;
			if (!isolated)
				graphs.push_back(std::move(g));
		}
	std::vector<Case> cases;
	for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
		const std::uint64_t n2 = graphs[gi].n();
		for (std::uint64_t d = 1; d <= 3 && d * n2 <= 20; ++d) {
			const std::uint64_t room = 20 - d * n2;
			std::vector<std::uint64_t> pads{0, std::min<std::uint64_t>(3, room), room};
			std::sort(pads.begin(), pads.end());
			pads.erase(std::unique(pads.begin(), pads.end()), pads.end());
			for (auto t : pads)
				for (std::uint64_t k2 = 0; k2 <= n2; ++k2)
					cases.push_back({gi, k2, d, t});
		}
	}
	sweep.run(cases.size(), [&](std::size_t idx) -> std::string {
		const auto &c = cases[idx];
		const auto &g2 = graphs[c.graph];
		auto g3 = vc::build_g3(g2, c.k2, c.d, c.t);
		auto brute = oracles::count_vertex_covers(g3.graph, g3.k3);
		auto identity = vc::reduced_count_by_partition(g2, c.d, c.t, c.k2);
		if (brute == identity)
			return {};
		return mismatch("sum y_i w_i", identity, brute,
		                describe(g2) + " k2=" + std::to_string(c.k2) + " d=" + std::to_string(c.d) + " t=" + std::to_string(c.t));
	});
	return sweep.finish();
}

SuiteResult vc_dominance(std::uint64_t kmax)
{
	Sweep sweep("vc-kernel w_i dominance");
	std::vector<std::pair<std::uint64_t, std::uint64_t>> tuples;
	for (std::uint64_t k2 = 0; k2 <= kmax; ++k2)
		for (std::uint64_t n2 = 0; n2 <= 2 * k2 * k2; ++n2)
			if (n2 != 1)
				tuples.emplace_back(k2, n2);
	sweep.run(tuples.size(), [&](std::size_t idx) -> std::string {
		const auto [k2, n2] = tuples[idx];
		const auto w = vc::compute_all_wi(n2, vc::padding_size(n2, k2), k2, n2);
		BinomialTable binom;
		for (std::size_t i = 0; i < w.size(); ++i) {
			BigCount tail = 0;
			for (std::size_t j = i + 1; j < w.size(); ++j)
				tail += binom(n2, j) * w[j];
			if (!(w[i] > tail))
				return "w_" + std::to_string(i) + " does not dominate at k2=" + std::to_string(k2) + " n2=" + std::to_string(n2);
		}
		return {};
	});
	return sweep.finish();
}

SuiteResult vc_dp_vs_direct(std::uint64_t bound)
{
	Sweep sweep("vc-kernel w_i table vs direct sum");
	struct Case {
		std::uint64_t d, t, k2, n2;
	};
	std::vector<Case> cases;
	for (std::uint64_t d = 0; d <= bound; ++d)
		for (std::uint64_t t = 0; t <= bound; ++t)
			for (std::uint64_t k2 = 0; k2 <= bound; ++k2)
				for (std::uint64_t n2 = 0; n2 <= bound; ++n2)
					cases.push_back({d, t, k2, n2});
	sweep.run(cases.size(), [&](std::size_t idx) -> std::string {
		const auto c = cases[idx];
		const auto all = vc::compute_all_wi(c.d, c.t, c.k2, c.n2);
		for (std::uint64_t i = 0; i <= std::min(c.k2, c.n2); ++i) {
			auto dp = vc::compute_wi(i, c.d, c.t, c.k2, c.n2);
			auto direct = oracles::direct_wi(i, c.d, c.t, c.k2, c.n2);
			if (dp != direct || all[i] != direct)
				return mismatch("w_" + std::to_string(i), dp, direct,
				                "d=" + std::to_string(c.d) + " t=" + std::to_string(c.t) + " k2=" + std::to_string(c.k2) +
				                    " n2=" + std::to_string(c.n2));
		}
		return {};
	});
	return sweep.finish();
}

SuiteResult vc_size_bounds(const Options &opt)
{
	Sweep sweep("vc-kernel size bounds");
	const auto graphs = graph_corpus(opt.nmax, opt.trials, opt.seed);
	const std::size_t ks = opt.kmax + 1;
	sweep.run(graphs.size() * ks, [&](std::size_t idx) -> std::string {
		const auto &g = graphs[idx / ks];
		const std::uint64_t k = idx % ks;
		auto r = vc::vc_reduce(vc_instance(g, k));
		const auto where = describe(g) + " k=" + std::to_string(k);
		if (r.context.branch == vc::Branch::zero)
			return r.reduced.graph.n() == 2 && r.reduced.graph.m() == 1 && r.reduced.k == 0 ? "" : "zero branch instance malformed on " + where;
		const BigCount n2 = r.context.n2;
		const BigCount k2 = r.context.k2;
		const BigCount expected = n2 * n2 + n2 + n2 * k2 + 2 * (n2 * k2) * (n2 * k2);
		const BigCount got = r.reduced.graph.n();
		if (got != expected)
			return mismatch("|V(G3)|", got, expected, where);
		if (n2 > 2 * k2 * k2)
			return "n2 exceeds 2*k2^2 on " + where;
		const BigCount big_k = k;
		if (k >= 1 && got > 18 * big_k * big_k * big_k * big_k * big_k * big_k)
			return "|V(G3)| exceeds 18k^6 on " + where;
		return {};
	});
	return sweep.finish();
}

SuiteResult minvc_kernel(const Options &opt)
{
	Sweep sweep("minvc-kernel end-to-end");
	const auto graphs = graph_corpus(opt.nmax, opt.trials, opt.seed);
	const auto kernel = vc::minimal_vc_kernel();
	const std::size_t ks = opt.kmax + 1;
	sweep.run(graphs.size() * ks, [&](std::size_t idx) -> std::string {
		const auto &g = graphs[idx / ks];
		const std::uint64_t k = idx % ks;
		const auto where = describe(g) + " k=" + std::to_string(k);
		auto inst = minimal_vc_instance(g, k);
		auto report = verify_compression(*kernel, inst);
		if (!report.pass)
			return mismatch("lifted count", report.lifted, report.direct, where);
		auto r = vc::minimal_vc_reduce(inst);
		const auto n = r.reduced.graph.n();
		const auto m = r.reduced.graph.m();
		if (r.branch == vc::Branch::zero)
			return n == 2 && m == 1 && r.reduced.k == 0 ? "" : "zero branch instance malformed on " + where;
		if (r.reduced.k > k || n > 2 * k * k || m > k * k)
			return "reduced instance (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") exceeds 2k^2 / k^2 on " + where;
		return {};
	});
	return sweep.finish();
}

SuiteResult sum_composition(const Options &opt)
{
	Sweep sweep("sum composition");
	std::mt19937_64 rng(opt.seed);
	const std::size_t nmax = std::max<std::size_t>(opt.nmax, 2);
	auto tuples = draw_tuples(
	    opt.trials, rng, [](std::mt19937_64 &r) { return std::uniform_int_distribution<std::size_t>(1, 4)(r); },
	    [](const std::vector<StInstance> &tuple, std::uint64_t k) {
		    if (k == 0)
			    return false;
		    std::uint64_t edges = 0;
		    for (const auto &inst : tuple)
			    edges += inst.first.m();
		    return binomial_saturating(edges, k) <= oracles::kEnumerationLimit / 4;
	    },
	    [nmax](std::mt19937_64 &r) { return random_st_instance(2, nmax, r); });
	sweep.run(tuples.size(), [&](std::size_t idx) -> std::string {
		const auto &tuple = tuples[idx];
		auto composed = compose::sum_compose(tuple);
		BigCount expected = 0;
		std::uint64_t max_edges = 0;
		for (const auto &[g, st] : tuple) {
			expected += oracles::count_min_st_cuts(g, st).count;
			max_edges = std::max<std::uint64_t>(max_edges, g.m());
		}
		auto got = oracles::count_min_st_cuts(composed.graph, composed.terminals);
		const auto where = "tuple #" + std::to_string(idx) + " (l=" + std::to_string(tuple.size()) + ", first " + describe(tuple[0]) + ")";
		if (got.count != expected)
			return mismatch("composed count", got.count, expected, where);
		if (got.cut_size != composed.cut_size)
			return "composed cut size " + std::to_string(got.cut_size) + " differs from " + std::to_string(composed.cut_size) + " on " + where;
		if (composed.cut_size > max_edges)
			return "composed parameter exceeds max |E_i| on " + where;
		return {};
	});
	return sweep.finish();
}

SuiteResult exact_composition(const Options &opt)
{
	Sweep sweep("exact composition");
	sweep.single([] {
		Graph p(3);
		p.add_edge(0, 1);
		p.add_edge(1, 2);
		std::vector<StInstance> two{{p, {0, 2}}, {p, {0, 2}}};
		auto c = compose::exact_compose(two);
		if (c.graph.m() != 28)
			return std::string("two-path composition should have 28 edges");
		auto q = oracles::count_min_st_cuts(c.graph, c.terminals);
		if (q.count != 544 || q.cut_size != 5)
			return mismatch("two-path composed count", q.count, 544, "cut size " + std::to_string(q.cut_size));
		auto parts = compose::exact_extract(c.meta, q.count);
		if (parts != std::vector<BigCount>{2, 2})
			return std::string("extraction of 544 did not return [2, 2]");
		return std::string();
	});
	sweep.single([] {
		Graph e(2);
		e.add_edge(0, 1);
		std::vector<StInstance> two{{e, {0, 1}}, {e, {0, 1}}};
		auto c = compose::exact_compose(two);
		if (c.meta.branch != "trivial")
			return std::string("two single edges should take the trivial branch");
		return compose::exact_extract(c.meta, 12345) == std::vector<BigCount>{1, 1} ? std::string() : std::string("trivial branch answers wrong");
	});

	std::mt19937_64 rng(opt.seed);
	auto draw_small = [](std::mt19937_64 &r) {
		std::uniform_int_distribution<std::size_t> size(2, 4);
		std::uniform_int_distribution<std::size_t> edge_count(1, 3);
		const auto n = size(r);
		const auto want = std::min(edge_count(r), n * (n - 1) / 2);
		Graph g(n);
		std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(n - 1));
		while (g.m() < want) {
			auto a = vertex(r);
			auto b = vertex(r);
			if (a != b && !g.has_edge(a, b))
				g.add_edge(a, b);
		}
		Vertex s = vertex(r);
		Vertex t = vertex(r);
		while (t == s)
			t = vertex(r);
		return StInstance{std::move(g), {s, t}};
	};
	auto tuples = draw_tuples(
	    std::max<std::size_t>(20, opt.trials / 10), rng, [](std::mt19937_64 &) { return std::size_t{2}; },
	    [](const std::vector<StInstance> &tuple, std::uint64_t k) {
		    std::uint64_t mprime = 0;
		    std::uint64_t edges = 0;
		    for (const auto &inst : tuple) {
			    mprime = std::max<std::uint64_t>(mprime, inst.first.m());
			    edges += inst.first.m();
		    }
		    if (tuple.size() >= (std::uint64_t{1} << mprime))
			    return false;
		    const std::uint64_t m = 2 * mprime;
		    const std::uint64_t paths = m * (tuple.size() - 1);
		    std::uint64_t gadget_edges = 0;
		    for (std::uint64_t i = 0; i < tuple.size(); ++i)
			    gadget_edges += (m * i) * 4 + (paths - m * i) * 2;
		    return binomial_saturating(edges + gadget_edges, k + paths) <= oracles::kEnumerationLimit;
	    },
	    draw_small);
	sweep.run(tuples.size(), [&](std::size_t idx) -> std::string {
		const auto &tuple = tuples[idx];
		auto c = compose::exact_compose(tuple);
		std::vector<BigCount> counts;
		for (const auto &[g, st] : tuple)
			counts.push_back(oracles::count_min_st_cuts(g, st).count);
		auto q = oracles::count_min_st_cuts(c.graph, c.terminals);
		const auto where = "tuple #" + std::to_string(idx) + " (" + describe(tuple[0]) + " | " + describe(tuple[1]) + ")";
		auto expected = compose::exact_combine(c.meta, counts);
		if (q.count != expected)
			return mismatch("composed count", q.count, expected, where);
		if (compose::exact_extract(c.meta, q.count) != counts)
			return "extraction mismatch on " + where;
		return {};
	});
	return sweep.finish();
}

SuiteResult exact_witness(const Options &opt)
{
	Sweep sweep("exact composition tree decomposition");
	std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
	auto tuples = draw_tuples(
	    std::max<std::size_t>(50, opt.trials / 5), rng, [](std::mt19937_64 &r) { return std::uniform_int_distribution<std::size_t>(1, 3)(r); },
	    [](const std::vector<StInstance> &, std::uint64_t) { return true; },
	    [](std::mt19937_64 &r) { return random_st_instance(2, 10, r); });
	sweep.run(tuples.size(), [&](std::size_t idx) -> std::string {
		const auto &tuple = tuples[idx];
		auto c = compose::exact_compose(tuple);
		std::size_t bound = 2;
		for (const auto &[g, st] : tuple)
			bound = std::max(bound, input_width(g) + 1);
		const auto where = "tuple #" + std::to_string(idx) + " (first " + describe(tuple[0]) + ")";
		auto check = validate_tree_decomposition(c.graph, c.witness);
		if (!check.valid)
			return std::string("witness invalid (") + to_string(check.violation) + " " + check.detail + ") on " + where;
		if (c.witness.width() > bound)
			return "witness width " + std::to_string(c.witness.width()) + " exceeds " + std::to_string(bound) + " on " + where;
		return {};
	});
	return sweep.finish();
}

SuiteResult ppt_oct(const Options &opt)
{
	Sweep sweep("ppt mincut-oct");
	std::vector<StInstance> corpus;
	for (std::size_t n = 2; n <= std::min<std::size_t>(opt.nmax, 5); ++n)
		for (auto &g : all_graphs(n)) {
			std::size_t comps = 0;
			connected_components(g, &comps);
			if (comps == 1 && g.m() <= 6)
				corpus.push_back({std::move(g), {0, static_cast<Vertex>(n - 1)}});
		}
	std::mt19937_64 rng(opt.seed);
	for (std::size_t i = 0; i < opt.trials / 5; ++i) {
		std::uniform_int_distribution<std::size_t> size(6, 7);
		const auto n = size(rng);
		auto g = random_connected(n, 6, rng);
		std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(n - 1));
		Vertex s = vertex(rng);
		Vertex t = vertex(rng);
		while (t == s)
			t = vertex(rng);
		corpus.push_back({std::move(g), {s, t}});
	}
	Graph split(4);
	split.add_edge(0, 1);
	split.add_edge(2, 3);
	corpus.push_back({split, {0, 3}});

	const auto ppt = compose::mincut_to_oct();
	sweep.run(corpus.size(), [&](std::size_t idx) -> std::string {
		const auto &[g, st] = corpus[idx];
		const auto where = describe(corpus[idx]);
		auto inst = min_cut_instance(g, st);
		auto report = verify_compression(*ppt, inst);
		if (!report.pass)
			return mismatch("transversal count", report.reduced_count, report.direct, where);
		auto r = compose::ppt_mincut_to_oct(inst);
		if (!oracles::is_nice_oct_instance(r.reduced.graph, r.reduced.k))
			return "output not nice on " + where;
		return {};
	});
	return sweep.finish();
}

SuiteResult ppt_vc(const Options &opt)
{
	Sweep sweep("ppt oct-vc");
	const auto graphs = graph_corpus(std::min<std::size_t>(opt.nmax, 6), 0, opt.seed);
	const std::size_t ks = opt.kmax + 1;
	const auto ppt = compose::oct_to_vc(false);
	std::uint64_t nice = 0;
	sweep.run(graphs.size() * ks, [&](std::size_t idx) -> std::string {
		const auto &g = graphs[idx / ks];
		const std::uint64_t k = idx % ks;
		if (!oracles::is_nice_oct_instance(g, k))
			return {};
#pragma omp atomic
		++nice;
		const auto where = describe(g) + " k=" + std::to_string(k);
		auto inst = oct_instance(g, k);
		auto report = verify_compression(*ppt, inst);
		if (!report.pass)
			return mismatch("halved cover count", report.lifted, report.direct, where);
		auto out = compose::ppt_oct_to_vc(inst);
		const auto n = g.n();
		if (oracles::max_matching_size(out.graph) != n)
			return "matching number differs from n on " + where;
		if (oracles::lp_vc_value(out.graph) != oracles::HalfInteger{2 * n})
			return "LP value differs from n on " + where;
		return {};
	});
	auto result = sweep.finish();
	result.name += " (" + std::to_string(nice) + " nice instances)";
	return result;
}

std::vector<SuiteResult> run_group(const std::string &name, const Options &opt)
{
	std::vector<SuiteResult> out;
	const bool all = name == "all";
	bool known = all;
	if (all || name == "vc-kernel") {
		known = true;
		out.push_back(vc_end_to_end(opt));
		out.push_back(vc_map_size(opt));
		out.push_back(vc_dominance(opt.kmax));
		out.push_back(vc_dp_vs_direct(std::min<std::uint64_t>(opt.kmax, 6)));
		out.push_back(vc_size_bounds(opt));
	}
	if (all || name == "minvc-kernel") {
		known = true;
		out.push_back(minvc_kernel(opt));
	}
	if (all || name == "sum") {
		known = true;
		out.push_back(sum_composition(opt));
	}
	if (all || name == "exact") {
		known = true;
		out.push_back(exact_composition(opt));
		out.push_back(exact_witness(opt));
	}
	if (all || name == "ppt-oct") {
		known = true;
		out.push_back(ppt_oct(opt));
	}
	if (all || name == "ppt-vc") {
		known = true;
		out.push_back(ppt_vc(opt));
	}
	if (!known)
		throw PreconditionError("unknown verification suite '" + name + "'");
	return out;
}

const std::vector<std::string> &group_names()
{
	static const std::vector<std::string> names{"vc-kernel", "minvc-kernel", "sum", "exact", "ppt-oct", "ppt-vc", "all"};
	return names;
}

} // namespace countkern::verify
