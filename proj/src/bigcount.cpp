#include "countkern/bigcount.hpp"

#include <algorithm>
#include <limits>

#include "countkern/errors.hpp"

namespace countkern {

std::string to_decimal(const BigCount &value)
{
	return value.str();
}

BigCount parse_decimal(std::string_view text)
{
	if (text.empty())
		throw ParseError("empty count");
	for (char c : text) {
		if (c < '0' || c > '9')
			throw ParseError("count is not a nonnegative decimal integer: '" + std::string(text) + "'");
	}
	return BigCount(std::string(text));
}

BigCount pow2(std::uint64_t e)
{
	BigCount r = 1;
	r <<= e;
	return r;
}

void BinomialTable::grow(std::size_t n)
{
	while (pascal_.size() <= n) {
		std::size_t r = pascal_.size();
		std::vector<BigCount> row(r + 1);
		row[0] = 1;
		row[r] = 1;
		for (std::size_t j = 1; j < r; ++j)
			row[j] = pascal_[r - 1][j - 1] + pascal_[r - 1][j];
		pascal_.push_back(std::move(row));
	}
}

BigCount BinomialTable::operator()(std::uint64_t n, std::uint64_t k)
{
	if (k > n)
		return 0;
	if (n < cached_rows_) {
		grow(n);
		return pascal_[n][k];
	}
	k = std::min(k, n - k);
	return row(n, k)[k];
}

std::vector<BigCount> BinomialTable::row(std::uint64_t n, std::uint64_t kmax)
{
	std::vector<BigCount> out(kmax + 1);
	if (n < cached_rows_) {
		grow(n);
		for (std::uint64_t j = 0; j <= kmax; ++j)
			out[j] = j <= n ? pascal_[n][j] : BigCount(0);
		return out;
	}
	out[0] = 1;
	for (std::uint64_t j = 1; j <= kmax; ++j) {
		if (j > n) {
			out[j] = 0;
			continue;
		}
		out[j] = out[j - 1] * (n - j + 1) / j;
	}
	return out;
}

BigCount BinomialTable::prefix_sum(std::uint64_t n, std::uint64_t kmax)
{
	BigCount s = 0;
	for (const auto &c : row(n, std::min(kmax, n)))
		s += c;
	return s;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k)
{
	constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
	if (k > n)
		return 0;
	k = std::min(k, n - k);
	unsigned __int128 r = 1;
	for (std::uint64_t j = 1; j <= k; ++j) {
		r = r * (n - k + j) / j;
		if (r > cap)
			return cap;
	}
	return static_cast<std::uint64_t>(r);
}

} // namespace countkern
