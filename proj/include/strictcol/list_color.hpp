#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strictcol/enumerate.hpp"
#include "strictcol/graph.hpp"
#include "strictcol/list_assignment.hpp"

namespace strictcol {

/// One representative per class of k-assignments of `g` (colors 1..n·k).
/// Throws BoundError when n·k exceeds `bound`.
std::vector<ListAssignment> enumerate_k_assignments(const Graph& g, int k,
                                                    int bound = kDefaultKAssignmentBound,
                                                    const EnumerationOptions& opts = {});

struct ChoosabilityVerdict {
    bool choosable = false;
    std::optional<ListAssignment> bad; // first uncolorable class, when not choosable
    std::uint64_t classes_examined = 0;
    std::uint64_t nodes_searched = 0;
};

/// Exhaustive k-choosability over all k-assignment classes.
ChoosabilityVerdict k_choosable(const Graph& g, int k, int bound = kDefaultKAssignmentBound,
                                const EnumerationOptions& opts = {});

/// Least k <= max_k with g k-choosable. When none is found, `value` is empty
/// and the choice number is known to be at least `lower_bound`.
struct ChoiceNumber {
    std::optional<int> value;
    int lower_bound = 1;
};

ChoiceNumber choice_number(const Graph& g, int max_k, int bound = kDefaultKAssignmentBound,
                           const EnumerationOptions& opts = {});

/// 2-choosability by the Erdős–Rubin–Taylor core characterization: every
/// component's core is empty, an even cycle, or theta(2,2,2m).
bool two_choosable_fast(const Graph& g);

/// Vertices left after repeatedly deleting vertices of degree <= 1.
VertexMask core_vertices(const Graph& g);

/// Smallest d such that every subgraph has a vertex of degree <= d.
int degeneracy(const Graph& g);

} // namespace strictcol
