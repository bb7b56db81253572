#pragma once

// Parallel k-subset enumeration shared by the oracles.
//
// Subsets of a fixed size r are visited in lexicographic order. The index
// range [0, C(universe, r)) is cut into fixed-size chunks; each chunk unranks
// its first combination and walks forward with next_combination, so the work
// split depends only on the chunk size and the totals are independent of the
// number of threads.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "countkern/bigcount.hpp"
#include "countkern/errors.hpp"

namespace countkern::detail {

inline constexpr std::uint64_t kChunk = 1u << 12;

/// Number of candidate subsets with min_size <= |S| <= max_size (saturating).
inline std::uint64_t candidate_count(std::uint64_t universe, std::uint64_t min_size, std::uint64_t max_size)
{
	std::uint64_t total = 0;
	for (std::uint64_t r = min_size; r <= std::min(max_size, universe); ++r) {
		auto c = binomial_saturating(universe, r);
		if (total > UINT64_MAX - c)
			return UINT64_MAX;
		total += c;
	}
	return total;
}

inline void require_enumerable(std::uint64_t candidates, std::uint64_t limit, const char *what)
{
	if (candidates > limit)
		throw SizeError(std::string(what) + ": " + std::to_string(candidates) + " candidate subsets exceed the enumeration limit of " +
		                std::to_string(limit));
}

/// Writes the combination of rank `rank` (lexicographic) into comb.
inline void unrank_combination(std::uint64_t universe, std::uint64_t rank, std::vector<std::uint32_t> &comb)
{
	const std::size_t r = comb.size();
	std::uint64_t x = 0;
	for (std::size_t i = 0; i < r; ++i) {
		for (;;) {
			auto block = binomial_saturating(universe - x - 1, r - i - 1);
			if (rank < block)
				break;
			rank -= block;
			++x;
		}
		comb[i] = static_cast<std::uint32_t>(x);
		++x;
	}
}

/// Advances to the lexicographic successor; false after the last one.
inline bool next_combination(std::vector<std::uint32_t> &comb, std::uint64_t universe)
{
	const std::size_t r = comb.size();
	std::size_t i = r;
	while (i > 0) {
		--i;
		if (comb[i] < universe - r + i) {
			++comb[i];
			for (std::size_t j = i + 1; j < r; ++j)
				comb[j] = comb[j - 1] + 1;
			return true;
		}
	}
	return false;
}

/// counts[r - min_size] = number of r-subsets accepted by a checker.
/// `make_checker()` is called once per thread; the checker is invoked as
/// `bool(std::span<const std::uint32_t>)`.
template <class MakeChecker>
std::vector<std::uint64_t> count_subsets_parallel(std::uint64_t universe, std::uint64_t min_size, std::uint64_t max_size,
                                                  MakeChecker make_checker)
{
	std::vector<std::uint64_t> counts;
	for (std::uint64_t r = min_size; r <= max_size; ++r) {
		if (r > universe) {
			counts.push_back(0);
			continue;
		}
		const std::uint64_t total = binomial_saturating(universe, r);
		const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
		std::uint64_t accepted = 0;
#pragma omp parallel reduction(+ : accepted)
		{
			auto check = make_checker();
			std::vector<std::uint32_t> comb(r);
#pragma omp for schedule(dynamic)
			for (std::int64_t c = 0; c < chunks; ++c) {
				const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk;
				const std::uint64_t last = std::min(total, first + kChunk);
				unrank_combination(universe, first, comb);
				for (std::uint64_t idx = first; idx < last; ++idx) {
					if (check(std::span<const std::uint32_t>(comb)))
						++accepted;
					next_combination(comb, universe);
				}
			}
		}
		counts.push_back(accepted);
	}
	return counts;
}

} // namespace countkern::detail
