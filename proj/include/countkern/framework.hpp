#pragma once

// Counting compressions as (reduce, lift) pairs.
//
// reduce maps an instance to a (small) instance of a possibly different
// problem and records a LiftContext: the exact statistics lift needs later.
// lift turns the count of the reduced instance back into the count of the
// original one. Contexts serialize to versioned JSON so the two halves can
// run in separate processes.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "countkern/bigcount.hpp"
#include "countkern/graph.hpp"
#include "countkern/oracles.hpp"

namespace countkern {

enum class Problem {
	vertex_cover,
	minimal_vertex_cover,
	odd_cycle_transversal,
	min_st_cut,
};

enum class ParamKind {
	solution_size,
	min_cut_size,
	treewidth,
	k_minus_matching,
	k_minus_lp,
};

const char *to_string(Problem p);
const char *to_string(ParamKind p);
Problem problem_from_string(const std::string &s);
ParamKind param_kind_from_string(const std::string &s);

/// Graph plus budget. For vertex-subset problems `k` is the solution-size
/// budget; for min-cut problems it mirrors the minimum cut size. `param_kind`
/// says which parameter the instance is considered under.
struct CountingInstance {
	Problem problem = Problem::vertex_cover;
	Graph graph;
	std::optional<TerminalPair> terminals;
	std::uint64_t k = 0;
	ParamKind param_kind = ParamKind::solution_size;
};

CountingInstance vc_instance(Graph g, std::uint64_t k);
CountingInstance minimal_vc_instance(Graph g, std::uint64_t k);
CountingInstance oct_instance(Graph g, std::uint64_t k);
/// Min-cut instance with k set to the minimum cut size.
CountingInstance min_cut_instance(Graph g, TerminalPair st);

/// Throws PreconditionError when the parameter kind does not fit the problem
/// or terminals are missing/present where they should not be.
void check_instance(const CountingInstance &inst);

/// Parameter value as a half-integer (k - LP_VC can be fractional).
oracles::HalfInteger parameter_value(const CountingInstance &inst);

/// Ground-truth count by the brute-force oracles.
BigCount oracle_count(const CountingInstance &inst);

struct LiftContext {
	std::string compression;
	int version = 1;
	nlohmann::json payload = nlohmann::json::object();

	nlohmann::json to_json() const;
	static LiftContext from_json(const nlohmann::json &j);
	/// Canonical text form; parse(dump()) reproduces the same text.
	std::string dump() const;
	static LiftContext parse(const std::string &text);

	bool operator==(const LiftContext &) const = default;
};

struct CompressionResult {
	CountingInstance reduced;
	LiftContext context;
};

/// A counting compression (kernels and PPTs share this shape).
class Compression {
public:
	virtual ~Compression() = default;

	virtual std::string name() const = 0;
	virtual Problem source() const = 0;
	virtual Problem target() const = 0;
	virtual bool is_ppt() const { return false; }

	virtual CompressionResult reduce(const CountingInstance &inst) const = 0;
	/// Throws ProtocolError when the context belongs to another compression.
	virtual BigCount lift(const LiftContext &ctx, const BigCount &reduced_count) const = 0;

	/// Count of a reduced instance produced by this compression. Defaults to
	/// the oracle; compressions whose outputs are too large for brute force
	/// override it with an identity proven (and tested) for their structure.
	virtual BigCount count_reduced(const CompressionResult &result) const;

protected:
	void expect_context(const LiftContext &ctx, int version = 1) const;
};

using CompressionHandle = std::shared_ptr<const Compression>;

/// Identity compression of a problem into itself.
CompressionHandle identity_compression(Problem p);

/// reduce then lift with a caller-supplied reduced count.
BigCount run_compression(const Compression &c, const CountingInstance &inst, const BigCount &reduced_count);

/// Compression whose reduce is c.reduce after ppt.reduce and whose lift is
/// ppt.lift after c.lift; both contexts are nested in the composite context.
CompressionHandle compose_ppt_compression(CompressionHandle ppt, CompressionHandle c);

struct VerifyReport {
	std::string compression;
	BigCount direct;
	BigCount reduced_count;
	BigCount lifted;
	std::size_t original_vertices = 0;
	std::size_t original_edges = 0;
	std::size_t reduced_vertices = 0;
	std::size_t reduced_edges = 0;
	bool pass = false;
};

/// reduce, count the reduced instance, lift, compare with the direct oracle.
VerifyReport verify_compression(const Compression &c, const CountingInstance &inst);

/// Compressions and transformations addressable by name.
class Registry {
public:
	void add(CompressionHandle c);
	CompressionHandle find(const std::string &name) const;
	CompressionHandle get(const std::string &name) const;
	std::vector<std::string> names() const;

private:
	std::map<std::string, CompressionHandle> entries_;
};

/// Registry with every built-in compression, PPT and the standard pipelines.
const Registry &registry();

} // namespace countkern
