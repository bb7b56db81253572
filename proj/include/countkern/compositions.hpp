#pragma once

// Compositions of minimum (s,t)-cut instances and the transformations
// min-cut -> odd cycle transversal -> vertex cover.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "countkern/bigcount.hpp"
#include "countkern/framework.hpp"
#include "countkern/graph.hpp"

namespace countkern::compose {

using StInstance = std::pair<Graph, TerminalPair>;

/// Input indices grouped by minimum cut size.
std::map<std::uint64_t, std::vector<std::size_t>> group_by_min_cut(std::span<const StInstance> instances);

struct SumComposition {
	Graph graph;
	TerminalPair terminals{0, 0};
	std::uint64_t cut_size = 0;
	std::vector<std::vector<Vertex>> vertex_maps;
};

/// Chains the inputs so the composed min-cut count is the sum of theirs.
/// Throws CompositionError on empty input or unequal cut sizes.
SumComposition sum_compose(std::span<const StInstance> instances);

// ---------------------------------------------------------------- min-cut -> OCT

struct MinCutToOct {
	CountingInstance reduced;
	/// "normal", or "separated" when s and t lie in different components.
	std::string branch;
	std::uint64_t cut_size = 0;
	/// Copies of each vertex of the kept component, then subdivision vertices.
	std::vector<std::vector<Vertex>> copies;
	std::vector<Vertex> x;
	std::vector<Vertex> y;
};

/// Components containing neither terminal are dropped first. The output
/// budget equals the minimum cut size.
MinCutToOct ppt_mincut_to_oct(const CountingInstance &inst);

// ---------------------------------------------------------------- OCT -> VC

/// Two copies of g joined by the perfect matching v <-> v + n; budget n + k.
/// With check_nice set, a non-nice input raises PreconditionError.
CountingInstance ppt_oct_to_vc(const CountingInstance &inst, bool check_nice = false);

/// Halves the vertex cover count; an odd count raises IntegrityError.
BigCount oct_vc_lift(const BigCount &vc_count);

CompressionHandle mincut_to_oct();
CompressionHandle oct_to_vc(bool check_nice = false);

// ---------------------------------------------------------------- EXACT

struct ExactMetadata {
	/// "gadget" or "trivial".
	std::string branch;
	std::uint64_t ell = 0;
	std::uint64_t m = 0;
	std::uint64_t k = 0;
	std::vector<std::uint64_t> exponents;
	std::vector<BigCount> recorded_answers;

	nlohmann::json to_json() const;
	static ExactMetadata from_json(const nlohmann::json &j);

	bool operator==(const ExactMetadata &) const = default;
};

struct ExactComposition {
	Graph graph;
	TerminalPair terminals{0, 0};
	ExactMetadata meta;
	TreeDecomposition witness;
	/// max(2, max input width + 1); the witness never exceeds it.
	std::size_t width_bound = 0;
	/// Gadget branch: every copy's s_i, t_i in the composed graph.
	std::vector<TerminalPair> copy_terminals;
};

/// Input decompositions default to exact treewidth for small inputs and the
/// min-degree heuristic otherwise. Throws CompositionError on empty input
/// or unequal cut sizes.
ExactComposition exact_compose(std::span<const StInstance> instances);
ExactComposition exact_compose(std::span<const StInstance> instances, std::span<const TreeDecomposition> decompositions);

/// Recovers every input count from the composed count.
std::vector<BigCount> exact_extract(const ExactMetadata &meta, const BigCount &q);

/// sum_i q_i * 2^{e_i} for the gadget branch.
BigCount exact_combine(const ExactMetadata &meta, std::span<const BigCount> counts);

} // namespace countkern::compose
