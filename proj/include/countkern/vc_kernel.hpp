#pragma once

// Polynomial kernel for counting vertex covers of size at most k, and the
// quadratic kernel for counting minimal vertex covers.

#include <cstdint>
#include <optional>
#include <vector>

#include "countkern/bigcount.hpp"
#include "countkern/framework.hpp"
#include "countkern/graph.hpp"

namespace countkern::vc {

struct BussResult {
	Graph graph;
	std::uint64_t k = 0;
	/// Original indices of the surviving vertices.
	std::vector<Vertex> kept;
};

/// Deletes vertices of degree above the current budget until none is left,
/// decrementing the budget each time. std::nullopt means the budget ran out,
/// so no vertex cover of size <= k exists.
std::optional<BussResult> buss_reduce(const Graph &g, std::uint64_t k);

struct Stripped {
	Graph graph;
	std::uint64_t k2 = 0;
	std::uint64_t n1 = 0;
};

Stripped strip_isolated(const Graph &g1, std::uint64_t k1);

struct G3 {
	Graph graph;
	std::uint64_t k3 = 0;
	std::uint64_t d = 0;
	std::uint64_t t = 0;
};

/// Padding size d + d*k2 + 2*(d*k2)^2; throws DomainError on 64-bit overflow.
std::uint64_t padding_size(std::uint64_t d, std::uint64_t k2);

/// Every vertex replaced by d = n2 copies, edges joined copy-set to copy-set,
/// plus t isolated padding vertices (indices n2*d onward). k3 = d*k2.
G3 build_g3(const Graph &g2, std::uint64_t k2);

/// Same layout with caller-chosen d and t.
G3 build_g3(const Graph &g2, std::uint64_t k2, std::uint64_t d, std::uint64_t t);

enum class Branch { normal, zero };

struct VcLiftContext {
	Branch branch = Branch::zero;
	std::uint64_t n1 = 0;
	std::uint64_t n2 = 0;
	std::uint64_t k2 = 0;
	std::uint64_t d = 0;
	std::uint64_t t = 0;
	std::uint64_t k3 = 0;

	/// Payload object; all numbers as decimal strings.
	nlohmann::json to_payload() const;
	/// Throws ParseError on malformed fields, IntegrityError on broken invariants.
	static VcLiftContext from_payload(const nlohmann::json &payload);

	bool operator==(const VcLiftContext &) const = default;
};

struct VcReduction {
	CountingInstance reduced;
	VcLiftContext context;
};

VcReduction vc_reduce(const CountingInstance &inst);

/// w_i via the table M[l][p] = number of weighted ways to spread p removed
/// copies over l vertices, each contributing at most d-1.
/// Throws DomainError unless i <= k2 and i <= n2.
BigCount compute_wi(std::uint64_t i, std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2);

/// w_0 .. w_{min(k2, n2)} from a single table.
std::vector<BigCount> compute_all_wi(std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2);

/// Recovers the number of vertex covers of size <= k of the original graph
/// from the count x3 of the reduced instance. Throws IntegrityError when x3
/// is not a count the reduced instance can have.
BigCount vc_lift(const VcLiftContext &ctx, const BigCount &x3);

/// Vertex covers of the reduced instance, as sum_i y_i * w_i with y_i the
/// number of size-i vertex covers of g2. Brute force on G3 is infeasible once
/// the padding grows.
BigCount reduced_count_by_partition(const Graph &g2, std::uint64_t d, std::uint64_t t, std::uint64_t k2);

/// Recovers g2 from a normal-branch G3 (copy 0 of every vertex).
Graph g2_from_g3(const Graph &g3, const VcLiftContext &ctx);

struct MinimalReduction {
	CountingInstance reduced;
	Branch branch = Branch::zero;
};

MinimalReduction minimal_vc_reduce(const CountingInstance &inst);
BigCount minimal_vc_lift(Branch branch, const BigCount &x);

/// The constant instance used by the zero branch: a single edge with k = 0.
Graph zero_instance();

CompressionHandle vc_kernel();
CompressionHandle minimal_vc_kernel();

} // namespace countkern::vc
