#pragma once

// Property sweeps comparing kernels, compositions and transformations with
// the brute-force oracles. Used by the CLI `verify` command and the
// acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "countkern/graph.hpp"

namespace countkern::verify {

struct Options {
	std::size_t nmax = 6;
	std::uint64_t kmax = 4;
	std::uint64_t seed = 1;
	std::size_t trials = 500;
};

struct SuiteResult {
	std::string name;
	std::uint64_t cases = 0;
	std::uint64_t failures = 0;
	std::string first_failure;
	double seconds = 0;

	bool passed() const { return failures == 0 && cases > 0; }
	nlohmann::json to_json() const;
};

/// Every labeled graph on 0..n vertices.
std::vector<Graph> all_graphs(std::size_t n);

/// all_graphs for n <= min(nmax, 6); `per_size` seeded G(n, p) samples for
/// each larger n.
std::vector<Graph> graph_corpus(std::size_t nmax, std::size_t per_size, std::uint64_t seed);

SuiteResult vc_end_to_end(const Options &opt);
SuiteResult vc_map_size(const Options &opt);
SuiteResult vc_dominance(std::uint64_t kmax);
SuiteResult vc_dp_vs_direct(std::uint64_t bound);
SuiteResult vc_size_bounds(const Options &opt);
SuiteResult minvc_kernel(const Options &opt);
SuiteResult sum_composition(const Options &opt);
SuiteResult exact_composition(const Options &opt);
SuiteResult exact_witness(const Options &opt);
SuiteResult ppt_oct(const Options &opt);
SuiteResult ppt_vc(const Options &opt);

/// Suite group by CLI name: vc-kernel, minvc-kernel, sum, exact, ppt-oct,
/// ppt-vc or all. Throws PreconditionError on an unknown name.
std::vector<SuiteResult> run_group(const std::string &name, const Options &opt);

const std::vector<std::string> &group_names();

} // namespace countkern::verify
