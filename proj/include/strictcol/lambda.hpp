#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strictcol/enumerate.hpp"
#include "strictcol/graph.hpp"
#include "strictcol/list_assignment.hpp"
#include "strictcol/partition.hpp"

namespace strictcol {

/// Pairwise-disjoint color sets C_1..C_t.
struct ColorGrouping {
    std::vector<std::vector<int>> groups;

    friend bool operator==(const ColorGrouping&, const ColorGrouping&) = default;
};

/// A list assignment whose colors are split into groups, group j meeting
/// every list in the same number of colors. The multiset of those counts is
/// `lambda`. Groups may be listed in any order; validate_lambda works out
/// which part each group stands for.
struct LambdaAssignment {
    ListAssignment base;
    ColorGrouping grouping;
    IntegerPartition lambda;
};

struct LambdaViolation {
    enum class Kind {
        GroupCount,     // number of groups differs from the number of parts
        EmptyGroup,
        Overlap,        // a color sits in two groups
        Uncovered,      // a listed color belongs to no group
        ListSize,       // a list's size differs from weight(lambda)
        Intersection,   // |L(v) ∩ C_j| differs from group j's count
        CountMultiset,  // group counts do not form lambda
    };
    Kind kind;
    int vertex = -1;
    int group = -1;
    int expected = 0;
    int actual = 0;
    std::string message;
};

struct LambdaReport {
    bool valid = false;
    std::vector<LambdaViolation> violations;
    /// k_j for each group j (its most common intersection count).
    std::vector<int> group_targets;
};

LambdaReport validate_lambda(const LambdaAssignment& a);

/// Index of the group standing for each canonical part of lambda: parts are
/// ascending, groups are ordered by (target, index). Requires a valid report.
std::vector<int> groups_by_part(const LambdaReport& report);

/// Merges groups along `witness` (lambda refines `coarse`). Throws
/// PreconditionError when the witness does not prove the refinement or `a`
/// is not a valid lambda-assignment.
LambdaAssignment coarsen_grouping(const LambdaAssignment& a, const IntegerPartition& coarse,
                                  const GroupingWitness& witness);

/// Converts an enumerated class into a LambdaAssignment.
LambdaAssignment to_lambda_assignment(const ColumnAssignment& columns, const IntegerPartition& lambda);

/// Representatives of all lambda-assignment classes (Σ n·k_i <= bound).
std::vector<LambdaAssignment> enumerate_lambda_assignments(const Graph& g, const IntegerPartition& lambda,
                                                           int bound = kDefaultLambdaBound,
                                                           const EnumerationOptions& opts = {});

struct BadAssignmentWitness {
    LambdaAssignment assignment;
    std::uint64_t nodes_searched = 0;
};

/// A bad witness is valid iff the assignment validates and has no coloring.
bool validate_bad_witness(const Graph& g, const BadAssignmentWitness& w);

enum class BlockEvidence {
    Independent, // edgeless block, choosable at every level
    ErtCore,     // 2-choosable by the core characterization
    Degenerate,  // degeneracy < k, so greedy coloring succeeds
    Exhaustive,  // exhaustive k-assignment search
};

struct PartitionBlock {
    int k = 1;
    std::vector<int> vertices;
    BlockEvidence evidence = BlockEvidence::Independent;
    std::uint64_t classes_examined = 0;
};

/// Blocks aligned with lambda's canonical parts; G[block i] is
/// k_i-choosable per its evidence.
struct PartitionabilityWitness {
    IntegerPartition lambda;
    std::vector<PartitionBlock> blocks;
};

/// Re-derives a certificate for G[vertices] at level k, if one applies.
std::optional<BlockEvidence> certify_block(const Graph& g, const std::vector<int>& vertices, int k,
                                           std::uint64_t* classes_examined = nullptr);

bool validate_partitionability(const Graph& g, const PartitionabilityWitness& w);

struct PartitionabilitySearch {
    std::optional<PartitionabilityWitness> witness;
    bool exhausted = true; // false: bounds prevented a complete search
};

inline constexpr int kDefaultGenericPartitionVertices = 12;

/// Part-aligned partitions are tried first (for part-labelled graphs), then
/// vertex-level partitions for graphs within `generic_bound` vertices.
PartitionabilitySearch lambda_partitionable(const Graph& g, const IntegerPartition& lambda,
                                            int generic_bound = kDefaultGenericPartitionVertices);

/// Colors `g` from `a` block by block: block i only uses colors of the group
/// standing for lambda's part i.
std::optional<ColoringWitness> color_via_partition(const Graph& g, const PartitionabilityWitness& w,
                                                   const LambdaAssignment& a);

enum class Decision { Choosable, NotChoosable, Undecided };
enum class Provenance { Exhaustive, Partitionable, Case2, SeededWitness };

std::string to_string(Decision d);
std::string to_string(Provenance p);
std::string to_string(BlockEvidence e);

struct LambdaVerdict {
    Decision decision = Decision::Undecided;
    Provenance provenance = Provenance::Exhaustive;
    std::optional<BadAssignmentWitness> bad;
    std::optional<PartitionabilityWitness> partition;
    std::uint64_t classes_examined = 0;
    std::uint64_t nodes_searched = 0;
    std::string note;
};

/// Exact decision by exhaustive enumeration when Σ n·k_i <= bound;
/// otherwise a partitionability certificate, or Undecided.
LambdaVerdict lambda_choosable(const Graph& g, const IntegerPartition& lambda, int bound = kDefaultLambdaBound,
                               const EnumerationOptions& opts = {});

} // namespace strictcol
