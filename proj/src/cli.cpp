#include "countkern/cli.hpp"

#include <chrono>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "countkern/compositions.hpp"
#include "countkern/errors.hpp"
#include "countkern/framework.hpp"
#include "countkern/graph_io.hpp"
#include "countkern/oracles.hpp"
#include "countkern/vc_kernel.hpp"
#include "countkern/verify.hpp"

namespace countkern {

namespace {

using nlohmann::json;

/// Usage problems detected after CLI11 accepted the arguments.
class UsageError : public Error {
public:
	using Error::Error;
};

struct RunReport {
	std::string subcommand;
	json inputs = json::object();
	json outputs = json::object();
	json checks = json::array();
	double seconds = 0;
	/// Human rendering: one value per line.
	std::vector<std::string> lines;
	bool pass = true;

	json to_json() const
	{
		return {{"subcommand", subcommand}, {"inputs", inputs}, {"outputs", outputs}, {"checks", checks}, {"seconds", seconds}, {"pass", pass}};
	}
};

struct Args {
	bool json = false;
	std::string what;
	std::string action;
	std::string graph;
	std::optional<std::uint64_t> k;
	std::string out;
	std::string context;
	std::string meta;
	std::string count;
	std::vector<std::string> inputs;
	bool check_nice = false;
	verify::Options verify;
	std::size_t n = 0;
	double p = 0;
	std::uint64_t seed = 1;
};

std::string read_text(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw ParseError("cannot open '" + path + "'");
	return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string &path, const std::string &text)
{
	std::ofstream out(path);
	if (!out)
		throw ParseError("cannot write '" + path + "'");
	out << text;
}

json parse_json_file(const std::string &path)
{
	try {
		return json::parse(read_text(path));
	} catch (const json::parse_error &e) {
		throw ParseError(path + ": " + e.what());
	}
}

void require(const std::string &value, const char *flag, const std::string &command)
{
	if (value.empty())
		throw UsageError(command + " requires " + flag);
}

std::uint64_t budget(const Args &a, const GraphFile &file, const std::string &command)
{
	if (a.k)
		return *a.k;
	if (file.k)
		return *file.k;
	throw UsageError(command + " needs --k or a 'k' record in the graph file");
}

TerminalPair terminals(const GraphFile &file, const std::string &path)
{
	if (!file.terminals)
		throw ParseError(path + ": missing 't' record");
	return *file.terminals;
}

void write_instance(const std::string &path, const CountingInstance &inst)
{
	write_graph_file(path, GraphFile{inst.graph, inst.terminals, inst.k});
}

json graph_summary(const Graph &g)
{
	return {{"n", g.n()}, {"m", g.m()}};
}

void set_value(RunReport &r, const std::string &key, const std::string &value)
{
	r.outputs[key] = value;
	r.lines.push_back(value);
}

void cmd_oracle(const Args &a, RunReport &r)
{
	require(a.graph, "--graph", "oracle");
	auto file = read_graph_file(a.graph);
	r.inputs = {{"graph", a.graph}, {"problem", a.what}};
	const auto &g = file.graph;
	if (a.what == "vc" || a.what == "minvc" || a.what == "oct") {
		const auto k = budget(a, file, "oracle " + a.what);
		r.inputs["k"] = k;
		BigCount c = a.what == "vc"      ? oracles::count_vertex_covers(g, k)
		             : a.what == "minvc" ? oracles::count_minimal_vertex_covers(g, k)
		                                 : oracles::count_odd_cycle_transversals(g, k);
		set_value(r, "count", to_decimal(c));
	} else if (a.what == "mincut") {
		auto st = terminals(file, a.graph);
		auto c = oracles::count_min_st_cuts(g, st);
		r.outputs["cut_size"] = c.cut_size;
		set_value(r, "count", to_decimal(c.count));
	} else if (a.what == "matching") {
		set_value(r, "value", std::to_string(oracles::max_matching_size(g)));
	} else if (a.what == "lpvc") {
		set_value(r, "value", oracles::lp_vc_value(g).str());
	} else {
		auto tw = oracles::exact_treewidth(g);
		set_value(r, "value", std::to_string(tw.width));
	}
}

CompressionHandle kernel_handle(const std::string &kind)
{
	return kind == "vc" ? vc::vc_kernel() : vc::minimal_vc_kernel();
}

void cmd_kernel(const Args &a, RunReport &r)
{
	const auto kernel = kernel_handle(a.what);
	const std::string command = "kernel " + a.what + " " + a.action;
	if (a.action == "reduce") {
		require(a.graph, "--graph", command);
		require(a.out, "--out", command);
		require(a.context, "--context", command);
		auto file = read_graph_file(a.graph);
		const auto k = budget(a, file, command);
		auto inst = a.what == "vc" ? vc_instance(file.graph, k) : minimal_vc_instance(file.graph, k);
		auto result = kernel->reduce(inst);
		write_instance(a.out, result.reduced);
		write_text(a.context, result.context.dump() + "\n");
		r.inputs = {{"graph", a.graph}, {"k", k}};
		r.outputs = {{"graph", a.out}, {"context", a.context}, {"reduced", graph_summary(result.reduced.graph)}};
		r.outputs["reduced"]["k"] = result.reduced.k;
		r.outputs["branch"] = result.context.payload.value("branch", "");
		r.lines.push_back("n=" + std::to_string(result.reduced.graph.n()) + " m=" + std::to_string(result.reduced.graph.m()) +
		                  " k=" + std::to_string(result.reduced.k) + " branch=" + r.outputs["branch"].get<std::string>());
		return;
	}
	require(a.context, "--context", command);
	require(a.count, "--count", command);
	auto ctx = LiftContext::parse(read_text(a.context));
	r.inputs = {{"context", a.context}, {"count", a.count}};
	set_value(r, "count", to_decimal(kernel->lift(ctx, parse_decimal(a.count))));
}

std::vector<compose::StInstance> read_st_inputs(const std::vector<std::string> &paths)
{
	std::vector<compose::StInstance> out;
	for (const auto &path : paths) {
		auto file = read_graph_file(path);
		out.emplace_back(std::move(file.graph), terminals(file, path));
	}
	return out;
}

void cmd_compose(const Args &a, RunReport &r)
{
	const std::string command = "compose " + a.what;
	if (a.inputs.empty())
		throw UsageError(command + " requires --inputs");
	require(a.out, "--out", command);
	auto inputs = read_st_inputs(a.inputs);
	r.inputs = {{"inputs", a.inputs}};
	if (a.what == "sum") {
		auto c = compose::sum_compose(inputs);
		write_graph_file(a.out, GraphFile{c.graph, c.terminals, c.cut_size});
		r.outputs = {{"graph", a.out}, {"composed", graph_summary(c.graph)}};
		set_value(r, "cut_size", std::to_string(c.cut_size));
		return;
	}
	require(a.meta, "--meta", command);
	auto c = compose::exact_compose(inputs);
	const auto k = c.meta.branch == "gadget" ? c.meta.k + c.meta.m * (c.meta.ell - 1) : 1;
	write_graph_file(a.out, GraphFile{c.graph, c.terminals, k});
	write_text(a.meta, c.meta.to_json().dump(2) + "\n");
	r.outputs = {{"graph", a.out}, {"meta", a.meta}, {"composed", graph_summary(c.graph)}, {"branch", c.meta.branch}};
	r.outputs["witness_width"] = c.witness.width();
	r.outputs["width_bound"] = c.width_bound;
	r.checks.push_back({{"name", "witness width within bound"}, {"pass", c.witness.width() <= c.width_bound}});
	set_value(r, "cut_size", std::to_string(k));
}

void cmd_extract(const Args &a, RunReport &r)
{
	require(a.meta, "--meta", "extract");
	require(a.count, "--count", "extract");
	auto meta = compose::ExactMetadata::from_json(parse_json_file(a.meta));
	auto parts = compose::exact_extract(meta, parse_decimal(a.count));
	r.inputs = {{"meta", a.meta}, {"count", a.count}};
	auto counts = json::array();
	for (const auto &q : parts) {
		counts.push_back(to_decimal(q));
		r.lines.push_back(to_decimal(q));
	}
	r.outputs["counts"] = std::move(counts);
}

void cmd_ppt(const Args &a, RunReport &r)
{
	const std::string command = "ppt " + a.what;
	require(a.graph, "--graph", command);
	require(a.out, "--out", command);
	auto file = read_graph_file(a.graph);
	r.inputs = {{"graph", a.graph}};
	CompressionHandle ppt;
	CountingInstance inst;
	if (a.what == "mincut-oct") {
		ppt = compose::mincut_to_oct();
		inst = min_cut_instance(file.graph, terminals(file, a.graph));
	} else {
		ppt = compose::oct_to_vc(a.check_nice);
		const auto k = budget(a, file, command);
		r.inputs["k"] = k;
		inst = oct_instance(file.graph, k);
	}
	auto result = ppt->reduce(inst);
	write_instance(a.out, result.reduced);
	if (!a.context.empty())
		write_text(a.context, result.context.dump() + "\n");
	r.outputs = {{"graph", a.out}, {"reduced", graph_summary(result.reduced.graph)}};
	if (!a.context.empty())
		r.outputs["context"] = a.context;
	set_value(r, "k", std::to_string(result.reduced.k));
}

void cmd_lift(const Args &a, RunReport &r)
{
	require(a.context, "--context", "lift");
	require(a.count, "--count", "lift");
	auto ctx = LiftContext::parse(read_text(a.context));
	auto c = registry().find(ctx.compression);
	if (!c)
		throw ProtocolError("context names unknown compression '" + ctx.compression + "'");
	r.inputs = {{"context", a.context}, {"count", a.count}, {"compression", ctx.compression}};
	set_value(r, "count", to_decimal(c->lift(ctx, parse_decimal(a.count))));
}

void cmd_verify(const Args &a, RunReport &r)
{
	const auto &o = a.verify;
	r.inputs = {{"suite", a.what}, {"nmax", o.nmax}, {"kmax", o.kmax}, {"seed", o.seed}, {"trials", o.trials}};
	for (const auto &s : verify::run_group(a.what, o)) {
		r.checks.push_back(s.to_json());
		r.pass = r.pass && s.passed();
		std::ostringstream line;
		line << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.cases << " cases, " << s.failures << " failures ("
		     << s.seconds << " s)";
		if (!s.first_failure.empty())
			line << "\n  first failure: " << s.first_failure;
		r.lines.push_back(line.str());
	}
}

void cmd_gen(const Args &a, RunReport &r)
{
	require(a.out, "--out", "gen gnp");
	if (!(a.p >= 0.0 && a.p <= 1.0))
		throw UsageError("--p must lie in [0, 1]");
	auto g = oracles::random_graph(a.n, a.p, a.seed);
	write_graph_file(a.out, GraphFile{g, std::nullopt, std::nullopt});
	r.inputs = {{"n", a.n}, {"p", a.p}, {"seed", a.seed}};
	r.outputs = {{"graph", a.out}, {"generated", graph_summary(g)}};
	r.lines.push_back(a.out);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Counting kernels, compositions and brute-force oracles", "countkern"};
	app.require_subcommand(1);
	Args a;
	app.add_flag("--json", a.json, "Print the run report as JSON");

	auto *oracle = app.add_subcommand("oracle", "Brute-force count or graph parameter")->fallthrough();
	oracle->add_option("problem", a.what)->required()->check(CLI::IsMember({"vc", "minvc", "oct", "mincut", "matching", "lpvc", "tw"}));
	oracle->add_option("--graph", a.graph, "Graph file")->required();
	oracle->add_option("--k", a.k, "Solution size budget");

	auto *kernel = app.add_subcommand("kernel", "Kernel reduce / lift")->fallthrough();
	kernel->add_option("kind", a.what)->required()->check(CLI::IsMember({"vc", "minvc"}));
	kernel->add_option("action", a.action)->required()->check(CLI::IsMember({"reduce", "lift"}));
	kernel->add_option("--graph", a.graph);
	kernel->add_option("--k", a.k);
	kernel->add_option("--out", a.out, "Reduced graph file");
	kernel->add_option("--context", a.context, "Lift context file");
	kernel->add_option("--count", a.count, "Count of the reduced instance");

	auto *compose_cmd = app.add_subcommand("compose", "Compose min-cut instances")->fallthrough();
	compose_cmd->add_option("mode", a.what)->required()->check(CLI::IsMember({"sum", "exact"}));
	compose_cmd->add_option("--inputs", a.inputs, "Comma separated graph files with terminals")->delimiter(',');
	compose_cmd->add_option("--out", a.out);
	compose_cmd->add_option("--meta", a.meta, "Metadata file (exact)");

	auto *extract = app.add_subcommand("extract", "Recover input counts from an exact composition")->fallthrough();
	extract->add_option("--meta", a.meta)->required();
	extract->add_option("--count", a.count)->required();

	auto *ppt = app.add_subcommand("ppt", "Parameter transformations")->fallthrough();
	ppt->add_option("name", a.what)->required()->check(CLI::IsMember({"mincut-oct", "oct-vc"}));
	ppt->add_option("--graph", a.graph)->required();
	ppt->add_option("--k", a.k);
	ppt->add_option("--out", a.out);
	ppt->add_option("--context", a.context);
	ppt->add_flag("--check-nice", a.check_nice, "Refuse oct instances that are not nice");

	auto *lift = app.add_subcommand("lift", "Lift a count with any stored context")->fallthrough();
	lift->add_option("--context", a.context)->required();
	lift->add_option("--count", a.count)->required();

	auto *verify_cmd = app.add_subcommand("verify", "Run property suites against the oracles")->fallthrough();
	verify_cmd->add_option("suite", a.what)->required()->check(CLI::IsMember(verify::group_names()));
	verify_cmd->add_option("--nmax", a.verify.nmax)->capture_default_str();
	verify_cmd->add_option("--kmax", a.verify.kmax)->capture_default_str();
	verify_cmd->add_option("--seed", a.verify.seed)->capture_default_str();
	verify_cmd->add_option("--trials", a.verify.trials)->capture_default_str();

	auto *gen = app.add_subcommand("gen", "Generate graphs")->fallthrough();
	gen->add_option("model", a.what)->required()->check(CLI::IsMember({"gnp"}));
	gen->add_option("--n", a.n)->required();
	gen->add_option("--p", a.p)->required();
	gen->add_option("--seed", a.seed)->capture_default_str();
	gen->add_option("--out", a.out);

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::CallForHelp &e) {
		app.exit(e, out, err);
		return exit_ok;
	} catch (const CLI::ParseError &e) {
		app.exit(e, out, err);
		return exit_usage;
	}

	RunReport report;
	const auto start = std::chrono::steady_clock::now();
	int code = exit_ok;
	try {
		auto *sub = app.get_subcommands().front();
		report.subcommand = sub->get_name() + (a.what.empty() ? "" : " " + a.what) + (a.action.empty() ? "" : " " + a.action);
		if (sub == oracle)
			cmd_oracle(a, report);
		else if (sub == kernel)
			cmd_kernel(a, report);
		else if (sub == compose_cmd)
			cmd_compose(a, report);
		else if (sub == extract)
			cmd_extract(a, report);
		else if (sub == ppt)
			cmd_ppt(a, report);
		else if (sub == lift)
			cmd_lift(a, report);
		else if (sub == verify_cmd)
			cmd_verify(a, report);
		else
			cmd_gen(a, report);
	} catch (const UsageError &e) {
		err << "usage error: " << e.what() << '\n';
		return exit_usage;
	} catch (const SizeError &e) {
		err << "size guard: " << e.what() << '\n';
		return exit_size_guard;
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return exit_input;
	}
	report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	if (!report.pass)
		code = exit_verification_failed;
	if (a.json) {
		out << report.to_json().dump(2) << '\n';
	} else {
		for (const auto &line : report.lines)
			out << line << '\n';
	}
	return code;
}

} // namespace countkern
