#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "countkern/cli.hpp"
#include "countkern/graph_io.hpp"
#include "helpers.hpp"

using namespace countkern;
namespace fs = std::filesystem;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

class TempDir {
public:
	TempDir()
	{
		path_ = fs::temp_directory_path() / ("countkern-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
		fs::create_directories(path_);
	}
	~TempDir() { fs::remove_all(path_); }
	TempDir(const TempDir &) = delete;
	TempDir &operator=(const TempDir &) = delete;

	std::string file(const std::string &name) const { return (path_ / name).string(); }

	std::string write(const std::string &name, const std::string &text) const
	{
		std::ofstream(file(name)) << text;
		return file(name);
	}

	std::string write(const std::string &name, const GraphFile &g) const
	{
		write_graph_file(file(name), g);
		return file(name);
	}

private:
	fs::path path_;
	static inline int counter_ = 0;
};

std::string read(const std::string &path)
{
	std::ifstream in(path);
	return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("oracle subcommand")
{
	TempDir dir;
	auto k3 = dir.write("k3.graph", GraphFile{testutil::complete(3), std::nullopt, 2});
	auto r = run({"oracle", "vc", "--graph", k3});
	CHECK(r.code == exit_ok);
	CHECK(r.out == "3\n");
	CHECK(run({"oracle", "vc", "--graph", k3, "--k", "3"}).out == "4\n");
	CHECK(run({"oracle", "oct", "--graph", k3, "--k", "1"}).out == "3\n");
	CHECK(run({"oracle", "tw", "--graph", k3}).out == "2\n");
	CHECK(run({"oracle", "lpvc", "--graph", k3}).out == "3/2\n");

	auto p3 = dir.write("p3.graph", "p 3 2\ne 1 2\ne 2 3\nt 1 3\n");
	CHECK(run({"oracle", "mincut", "--graph", p3}).out == "2\n");
	auto json = nlohmann::json::parse(run({"--json", "oracle", "mincut", "--graph", p3}).out);
	CHECK(json.at("outputs").at("count") == "2");
	CHECK(json.at("outputs").at("cut_size") == 1);
	auto trailing = nlohmann::json::parse(run({"oracle", "mincut", "--graph", p3, "--json"}).out);
	CHECK(trailing.at("subcommand") == "oracle mincut");
}

TEST_CASE("kernel reduce and lift round trip")
{
	TempDir dir;
	auto edge = dir.write("edge.graph", "p 2 1\ne 1 2\n");
	auto reduced = dir.file("reduced.graph");
	auto ctx = dir.file("ctx.json");
	auto r = run({"kernel", "vc", "reduce", "--graph", edge, "--k", "1", "--out", reduced, "--context", ctx});
	REQUIRE(r.code == exit_ok);
	CHECK(r.out == "n=16 m=4 k=2 branch=normal\n");
	auto count = run({"oracle", "vc", "--graph", reduced});
	CHECK(count.out == "2\n");
	auto lifted = run({"kernel", "vc", "lift", "--context", ctx, "--count", "2"});
	CHECK(lifted.out == "2\n");
	CHECK(run({"lift", "--context", ctx, "--count", "2"}).out == "2\n");
	CHECK(run({"lift", "--context", ctx, "--count", "3"}).code == exit_ok);
	CHECK(run({"kernel", "minvc", "lift", "--context", ctx, "--count", "2"}).code == exit_input);
}

TEST_CASE("composition subcommands")
{
	TempDir dir;
	auto p3 = dir.write("p3.graph", "p 3 2\ne 1 2\ne 2 3\nt 1 3\n");
	auto out = dir.file("composed.graph");
	auto meta = dir.file("meta.json");
	auto r = run({"compose", "exact", "--inputs", p3 + "," + p3, "--out", out, "--meta", meta});
	REQUIRE(r.code == exit_ok);
	CHECK(r.out == "5\n");
	auto composed = read_graph_file(out);
	CHECK(composed.k == 5);
	auto q = run({"oracle", "mincut", "--graph", out});
	CHECK(q.out == "544\n");
	CHECK(run({"extract", "--meta", meta, "--count", "544"}).out == "2\n2\n");
	CHECK(run({"extract", "--meta", meta, "--count", "545"}).code == exit_input);

	auto sum = run({"compose", "sum", "--inputs", p3 + "," + p3 + "," + p3, "--out", out});
	CHECK(sum.out == "1\n");
	CHECK(run({"oracle", "mincut", "--graph", out}).out == "6\n");
}

TEST_CASE("transformation subcommands")
{
	TempDir dir;
	auto p3 = dir.write("p3.graph", "p 3 2\ne 1 2\ne 2 3\nt 1 3\n");
	auto oct = dir.file("oct.graph");
	auto ctx = dir.file("oct.json");
	auto r = run({"ppt", "mincut-oct", "--graph", p3, "--out", oct, "--context", ctx});
	REQUIRE(r.code == exit_ok);
	CHECK(r.out == "1\n");
	CHECK(run({"oracle", "oct", "--graph", oct}).out == "2\n");
	CHECK(run({"lift", "--context", ctx, "--count", "2"}).out == "2\n");

	auto k3 = dir.write("k3.graph", GraphFile{testutil::complete(3), std::nullopt, 1});
	auto vc = dir.file("vc.graph");
	CHECK(run({"ppt", "oct-vc", "--graph", k3, "--out", vc, "--check-nice"}).out == "4\n");
	CHECK(run({"oracle", "vc", "--graph", vc}).out == "6\n");
	auto two = dir.write("two.graph", GraphFile{testutil::operator+(testutil::complete(3), testutil::complete(3)), std::nullopt, 2});
	CHECK(run({"ppt", "oct-vc", "--graph", two, "--out", vc, "--check-nice"}).code == exit_input);
}

TEST_CASE("exit codes")
{
	TempDir dir;
	CHECK(run({}).code == exit_usage);
	CHECK(run({"frobnicate"}).code == exit_usage);
	CHECK(run({"oracle", "clique", "--graph", "x"}).code == exit_usage);
	CHECK(run({"--help"}).code == exit_ok);
	auto edge = dir.write("edge.graph", "p 2 1\ne 1 2\n");
	CHECK(run({"oracle", "vc", "--graph", edge}).code == exit_usage);
	CHECK(run({"kernel", "vc", "reduce", "--graph", edge, "--k", "1"}).code == exit_usage);
	CHECK(run({"oracle", "vc", "--graph", dir.file("missing.graph"), "--k", "1"}).code == exit_input);
	auto bad = dir.write("bad.graph", "p 2 1\ne 1 3\n");
	auto r = run({"oracle", "vc", "--graph", bad, "--k", "1"});
	CHECK(r.code == exit_input);
	CHECK(r.err.find("line 2") != std::string::npos);
	auto big = dir.write("big.graph", GraphFile{Graph(60), std::nullopt, 30});
	CHECK(run({"oracle", "vc", "--graph", big}).code == exit_size_guard);
	CHECK(run({"gen", "gnp", "--n", "4", "--p", "1.5", "--out", dir.file("g")}).code == exit_usage);
}

TEST_CASE("verify and gen subcommands")
{
	TempDir dir;
	auto r = run({"verify", "minvc-kernel", "--nmax", "4", "--kmax", "2", "--trials", "20"});
	CHECK(r.code == exit_ok);
	CHECK(r.out.rfind("PASS", 0) == 0);
	auto g = dir.file("g.graph");
	CHECK(run({"gen", "gnp", "--n", "6", "--p", "0.5", "--seed", "3", "--out", g}).code == exit_ok);
	CHECK(read_graph_file(g).graph.n() == 6);
	auto again = dir.file("h.graph");
	run({"gen", "gnp", "--n", "6", "--p", "0.5", "--seed", "3", "--out", again});
	CHECK(read(g) == read(again));
}

#ifdef COUNTKERN_CLI_PATH
TEST_CASE("installed binary")
{
	TempDir dir;
	auto k3 = dir.write("k3.graph", GraphFile{testutil::complete(3), std::nullopt, 2});
	auto out = dir.file("out.txt");
	const std::string cmd = std::string("\"") + COUNTKERN_CLI_PATH + "\" oracle vc --graph \"" + k3 + "\" > \"" + out + "\"";
	CHECK(std::system(cmd.c_str()) == 0);
	CHECK(read(out) == "3\n");
	const std::string bad = std::string("\"") + COUNTKERN_CLI_PATH + "\" nonsense 2> /dev/null";
	int status = std::system(bad.c_str());
	CHECK(WEXITSTATUS(status) == exit_usage);
}
#endif
