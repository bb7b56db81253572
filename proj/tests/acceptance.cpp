// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure, exceeded time budget or too small a sweep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "countkern/errors.hpp"
#include "countkern/verify.hpp"

using namespace countkern;
using verify::SuiteResult;

namespace {

struct Criterion {
	int id;
	std::string title;
	double budget_seconds;
	std::uint64_t min_cases;
	std::function<std::vector<SuiteResult>()> run;
};

bool report(const Criterion &c)
{
	const auto start = std::chrono::steady_clock::now();
	std::vector<SuiteResult> results;
	std::string error;
	try {
		results = c.run();
	} catch (const std::exception &e) {
		error = e.what();
	}
	const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

	std::uint64_t cases = 0;
	std::uint64_t failures = 0;
	std::string first;
	for (const auto &r : results) {
		cases += r.cases;
		failures += r.failures;
		if (first.empty() && !r.first_failure.empty())
			first = r.name + ": " + r.first_failure;
	}
	std::string why;
	if (!error.empty())
		why = "exception: " + error;
	else if (failures > 0)
		why = std::to_string(failures) + " failures; " + first;
	else if (cases < c.min_cases)
		why = "only " + std::to_string(cases) + " cases, need " + std::to_string(c.min_cases);
	else if (seconds > c.budget_seconds)
		why = "over time budget";
	for (const auto &r : results)
		if (!r.passed() && why.empty())
			why = r.name + " ran no cases";

	const bool pass = why.empty();
	char line[512];
	std::snprintf(line, sizeof line, "%s [%d] %s: %llu cases, %.2f s (budget %.0f s)", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
	              static_cast<unsigned long long>(cases), seconds, c.budget_seconds);
	std::cout << line;
	if (!pass)
		std::cout << " -- " << why;
	std::cout << std::endl;
	return pass;
}

std::vector<SuiteResult> one(SuiteResult r)
{
	return {std::move(r)};
}

} // namespace

int main()
{
	verify::Options base;
	base.nmax = 6;
	base.kmax = 4;
	base.seed = 1;
	base.trials = 500;

	verify::Options small_sum = base;
	small_sum.trials = 200;

	const std::vector<Criterion> criteria{
	    {1, "vertex cover kernel end to end, n <= 6, k <= 4", 300, 2000 * 5, [&] { return one(verify::vc_end_to_end(base)); }},
	    {2, "padded blow-up count equals the partition identity", 60, 1, [&] { return one(verify::vc_map_size(base)); }},
	    {3, "weight dominance for k <= 6", 60, 1, [] { return one(verify::vc_dominance(6)); }},
	    {4, "weight table equals direct enumeration, parameters <= 6", 60, 1, [] { return one(verify::vc_dp_vs_direct(6)); }},
	    {5, "minimal vertex cover kernel and size bounds", 120, 2000 * 5, [&] { return one(verify::minvc_kernel(base)); }},
	    {6, "sum composition over random tuples", 120, 500, [&] { return one(verify::sum_composition(base)); }},
	    {7, "min cut to transversal identity and niceness", 300, 300, [&] { return one(verify::ppt_oct(base)); }},
	    {8, "transversal to vertex cover on nice instances", 120, 1, [&] { return one(verify::ppt_vc(base)); }},
	    {9, "exact composition: two-path example and random pairs", 300, 22, [&] { return one(verify::exact_composition(base)); }},
	    {10, "exact composition decomposition witnesses", 120, 1, [&] { return one(verify::exact_witness(base)); }},
	    {11, "kernel size formula and sum parameter bound", 60, 1,
	     [&] { return std::vector<SuiteResult>{verify::vc_size_bounds(base), verify::sum_composition(small_sum)}; }},
	};

	int failed = 0;
	for (const auto &c : criteria)
		failed += !report(c);
	std::cout << (failed ? "FAIL" : "PASS") << ": " << criteria.size() - failed << "/" << criteria.size() << " criteria" << std::endl;
	return failed ? 1 : 0;
}
