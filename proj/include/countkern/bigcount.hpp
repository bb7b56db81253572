#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace countkern {

/// Exact nonnegative solution count.
using BigCount = boost::multiprecision::cpp_int;

std::string to_decimal(const BigCount &value);

/// Parses a nonnegative decimal integer. Rejects signs, whitespace and empty input.
BigCount parse_decimal(std::string_view text);

/// 2^e as a BigCount.
BigCount pow2(std::uint64_t e);

/// Exact binomial coefficients.
///
/// Rows up to `cached_rows` come from a lazily grown Pascal triangle. Rows
/// beyond that are produced multiplicatively, which keeps C(t, j) cheap for
/// the very large t values that show up as padding sizes.
class BinomialTable {
public:
	explicit BinomialTable(std::size_t cached_rows = 256) : cached_rows_(cached_rows) {}

	/// C(n, k); zero when k > n.
	BigCount operator()(std::uint64_t n, std::uint64_t k);

	/// C(n, 0), C(n, 1), ..., C(n, kmax).
	std::vector<BigCount> row(std::uint64_t n, std::uint64_t kmax);

	/// sum_{j=0}^{kmax} C(n, j).
	BigCount prefix_sum(std::uint64_t n, std::uint64_t kmax);

private:
	void grow(std::size_t n);

	std::size_t cached_rows_;
	std::vector<std::vector<BigCount>> pascal_;
};

/// Saturating C(n, k) in 64 bits; used by size guards.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

} // namespace countkern
