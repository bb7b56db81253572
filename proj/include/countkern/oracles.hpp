#pragma once

// Exponential-time ground truth for every counting problem handled by the
// library. Kernels, compositions and transformations are verified against
// these on small instances.
//
// The default functions split subset ranges across OpenMP threads. The
// `serial` namespace holds independent single-threaded reference versions
// (recursive include/exclude search) that the tests and benchmarks compare
// against; both must return identical results.

#include <cstdint>
#include <string>
#include <vector>

#include "countkern/bigcount.hpp"
#include "countkern/graph.hpp"

namespace countkern::oracles {

/// Enumerations whose candidate space exceeds this many subsets are refused
/// with SizeError.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 26;

/// Number of vertex covers S with |S| <= k.
BigCount count_vertex_covers(const Graph &g, std::uint64_t k);

/// Entry i is the number of vertex covers of size exactly i, for i = 0..kmax.
std::vector<BigCount> count_vertex_covers_by_size(const Graph &g, std::uint64_t kmax);

/// Number of inclusion-minimal vertex covers of size <= k.
BigCount count_minimal_vertex_covers(const Graph &g, std::uint64_t k);

/// Number of S, |S| <= k, with g - S bipartite.
BigCount count_odd_cycle_transversals(const Graph &g, std::uint64_t k);

/// Size of a minimum edge cut between s and t (unit-capacity max-flow).
std::uint64_t min_cut_size(const Graph &g, const TerminalPair &st);

struct MinCutCount {
	BigCount count;
	std::uint64_t cut_size = 0;
};

/// Counts edge sets of size exactly min_cut_size(g, st) that separate s and t.
MinCutCount count_min_st_cuts(const Graph &g, const TerminalPair &st);

/// True when deleting the marked edges (by edge index) disconnects s from t.
bool separates(const Graph &g, const TerminalPair &st, const std::vector<char> &removed_edges);

/// Maximum matching size by exhaustive search over matchings.
std::uint64_t max_matching_size(const Graph &g);

/// Maximum matching of a bipartite graph given by left/right adjacency
/// (augmenting paths). Used for the LP value and as a cross-check.
std::uint64_t bipartite_matching_size(std::size_t left, std::size_t right, const std::vector<std::vector<std::uint32_t>> &adj);

/// A nonnegative multiple of 1/2.
struct HalfInteger {
	std::uint64_t twice = 0;

	std::string str() const;
	bool operator==(const HalfInteger &) const = default;
	auto operator<=>(const HalfInteger &) const = default;
};

/// Optimum of the vertex cover LP relaxation: half the minimum vertex cover
/// of the bipartite double cover, which equals its maximum matching.
HalfInteger lp_vc_value(const Graph &g);

/// Minimum vertex cover size by enumeration.
std::uint64_t min_vertex_cover_size(const Graph &g);

struct TreewidthResult {
	std::size_t width = 0;
	TreeDecomposition witness;
	std::vector<Vertex> elimination_order;
};

inline constexpr std::size_t kTreewidthMaxVertices = 12;

/// Exact treewidth by dynamic programming over vertex subsets; n <= 12.
TreewidthResult exact_treewidth(const Graph &g);

/// Tree decomposition induced by an elimination ordering.
TreeDecomposition decomposition_from_order(const Graph &g, const std::vector<Vertex> &order);

/// Greedy min-degree decomposition; valid for any size, width not optimal.
TreeDecomposition heuristic_tree_decomposition(const Graph &g);

/// True iff every odd cycle transversal of size <= k leaves a connected,
/// non-empty graph.
bool is_nice_oct_instance(const Graph &g, std::uint64_t k);

/// G(n, p) graph, deterministic for a fixed seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// w_i by direct enumeration of every vector (a*, a_1, ..., a_{n2-i}) with
/// a* <= t, a_j <= d-1 and a* + sum a_j <= d*k2 - d*i. Brute force; keep the
/// parameters small.
BigCount direct_wi(std::uint64_t i, std::uint64_t d, std::uint64_t t, std::uint64_t k2, std::uint64_t n2);

namespace serial {

BigCount count_vertex_covers(const Graph &g, std::uint64_t k);
std::vector<BigCount> count_vertex_covers_by_size(const Graph &g, std::uint64_t kmax);
BigCount count_minimal_vertex_covers(const Graph &g, std::uint64_t k);
BigCount count_odd_cycle_transversals(const Graph &g, std::uint64_t k);
MinCutCount count_min_st_cuts(const Graph &g, const TerminalPair &st);
bool is_nice_oct_instance(const Graph &g, std::uint64_t k);

} // namespace serial

} // namespace countkern::oracles
