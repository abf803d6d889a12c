#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strictcol/enumerate.hpp"
#include "strictcol/graph.hpp"
#include "strictcol/lambda.hpp"
#include "strictcol/list_assignment.hpp"

namespace strictcol {

// Strict k-colorability of complete k-partite graphs.
//
// A graph is strictly k-colorable when it is k-colorable but not
// lambda_k-choosable, lambda_k = {1*(k-2),2}. For complete k-partite graphs
// with k >= 3 this holds exactly when the graph contains K_{3*k},
// K_{2,4,6*(k-2)} or K_{2,5*(k-1)}.

/// The three minimal strictly k-colorable families.
enum class StrictFamily { K3k, K246, K255 };

std::string to_string(StrictFamily f);
/// Part sizes of the family member for k: (3*k), (2,4,6*(k-2)), (2,5*(k-1)).
PartSizes family_sizes(StrictFamily f, int k);

/// Bad lambda_k-assignments. Colors follow the classical tables: 0..k for
/// K_{3*k}, 1..k+2 for the other two. Throw PreconditionError for k < 3.
LambdaAssignment witness_k3k(int k);
LambdaAssignment witness_k246(int k);
LambdaAssignment witness_k255(int k);
LambdaAssignment family_witness(StrictFamily f, int k);

/// Lifts an assignment on `pattern` to the larger `host` with the same number
/// of parts. Every added vertex copies the list of the first vertex of its
/// part. Throws PreconditionError if part counts differ or the host does not
/// dominate the pattern part by part.
LambdaAssignment extend_witness(const LambdaAssignment& base, const PartSizes& pattern, const PartSizes& host);

/// a_1 = 1, or a_1 = 2 and a_2 <= 3.
bool case1_applies(const PartSizes& sizes);
/// a_1 = 2, a_2 = 4 and a_3 <= 5.
bool case2_applies(const PartSizes& sizes);

/// lambda_k-partition of a Case-1 graph: V_3..V_k as independent blocks and
/// V_1 ∪ V_2 as the 2-choosable block. Throws PreconditionError otherwise.
PartitionabilityWitness case1_partition(const PartSizes& sizes);

struct Case2Round {
    int step = 1;                // 1, 2 or 3
    int singleton_part = 2;      // 0-based part holding its C_2 colors
    std::vector<int> c1_parts;   // parts attempted from C_1
    bool colored = false;        // whether that attempt succeeded
    bool hj_pattern = false;     // failure matched the bad K_{2,4} pattern
};

struct Case2Transcript {
    std::vector<Case2Round> rounds;
    int final_step = 1;
    /// Step 3 only: "1-in-ab", "2-in-ab", "no-extra" or "otherwise".
    std::string branch;
    std::vector<int> extra; // C_1 colors of V_3's extra list, if any
    ColoringWitness final;
};

/// Colors a lambda_k-assignment of a Case-2 graph following the three-step
/// argument: singletons on V_3.., then C_1 on (V_1,V_2), (V_1,V_3), and
/// finally a direct split of C_1 between V_2 and V_3. Failure of an
/// intermediate attempt is asserted to have the Hoffman–Johnson shape.
Case2Transcript case2_color(const PartSizes& sizes, const LambdaAssignment& a);

/// A Case-2 assignment that forces all three steps (used as the certificate
/// of a case2 verdict).
LambdaAssignment case2_demo_assignment(const PartSizes& sizes);

enum class StrictReason { ContainsK3k, ContainsK246, ContainsK255, Case1, Case2, Search };
std::string to_string(StrictReason r);

using StrictCertificate =
    std::variant<std::monostate, BadAssignmentWitness, PartitionabilityWitness, Case2Transcript>;

struct StrictDecision {
    std::optional<PartSizes> sizes;
    int k = 0;
    bool strict = false;
    bool decided = true;
    StrictReason reason = StrictReason::Search;
    StrictCertificate certificate;
    /// Case 2: the assignment the transcript colors.
    std::optional<LambdaAssignment> case2_input;
    /// Search only.
    std::optional<int> chromatic;
    std::uint64_t classes_examined = 0;
    std::string note;
};

/// Decision by the containment characterization. Requires k >= 3.
StrictDecision decide_strict_cmp(const PartSizes& sizes);

/// Decision from the definition: chi(g) = k and g not lambda_k-choosable,
/// the latter by exhaustive enumeration within `bound`.
StrictDecision decide_strict_search(const Graph& g, int k, int bound = kDefaultLambdaBound,
                                    const EnumerationOptions& opts = {});

/// Strict 1-colorability: edgeless graphs with at least one vertex.
bool strictly_1_colorable(const Graph& g);
/// Strict 2-colorability: bipartite with an edge and not 2-choosable.
bool strictly_2_colorable(const Graph& g);

/// Canonical representatives of all uncolorable m-assignment classes of
/// K_{m,n}, up to color renaming and permutations within each part.
std::vector<ListAssignment> hoffman_johnson_enumerate(int m, int n, int bound = kDefaultKAssignmentBound);

/// The classical bad 2-assignment of K_{2,4}.
ListAssignment hoffman_johnson_k24();

} // namespace strictcol
