#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "strictcol/graph.hpp"
#include "strictcol/list_assignment.hpp"
#include "strictcol/partition.hpp"

namespace strictcol {

// Exhaustive enumeration of grouped list assignments up to symmetry.
//
// A list assignment is stored by its color classes: for every color, the set
// of vertices whose list contains it. Two assignments that differ by a
// renaming of colors have the same multiset of classes, so a multiset, kept
// as a non-increasing sequence of vertex masks, is an exact representative
// of its color-renaming orbit. Group i (one per part k_i of lambda) holds
// classes covering every vertex exactly k_i times, and its colors are drawn
// from the window base_i+1 .. base_i+n*k_i, where base_i = sum_{j<i} n*k_j.
//
// Vertex symmetry is the group of part-preserving permutations of a
// part-labelled graph (vertices permuted within a part, equal-sized parts
// swapped). Among each orbit under vertex permutations, color renamings and
// swaps of equal-k groups, only the lexicographically greatest encoding is
// emitted when that symmetry group is small enough to list; otherwise every
// color-orbit representative is emitted.
//
// Groups are enumerated by decreasing k_i.

struct EnumerationOptions {
    int workers = 1;
    bool vertex_symmetry = true;
    std::size_t max_symmetry_group = 5040;
};

struct EnumerationStats {
    std::uint64_t classes = 0; // leaves emitted
    std::uint64_t nodes = 0;   // classes placed
    std::uint64_t pruned = 0;  // subtrees cut by the prune predicate
    std::uint64_t solver_nodes = 0;
    std::size_t symmetry_group_size = 1;

    EnumerationStats& operator+=(const EnumerationStats& o);
};

/// One grouped assignment in color-class form.
struct ColumnAssignment {
    int n = 0;
    std::vector<int> group_k;                    // canonical group order (ascending k)
    std::vector<int> window_base;                // per group
    std::vector<std::vector<VertexMask>> groups; // color classes per group

    int color_label(std::size_t group, std::size_t column) const
    {
        return window_base[group] + static_cast<int>(column) + 1;
    }
    ListAssignment lists() const;
    /// Colors of each group, in canonical group order.
    std::vector<std::vector<int>> color_groups() const;
};

inline constexpr int kDefaultKAssignmentBound = 24;
inline constexpr int kDefaultLambdaBound = 30;

/// Σ n·k_i for `lambda` on an n-vertex graph.
int enumeration_size(int n, const IntegerPartition& lambda);

/// Part-preserving vertex permutations, or just the identity when the graph
/// has no part labels, symmetry is disabled, or the group exceeds the limit.
std::vector<std::vector<int>> vertex_symmetries(const Graph& g, const EnumerationOptions& opts);

/// Color classes of `lists` in their greatest encoding over the vertex
/// symmetries. Equal results mean equal up to color renaming and symmetry.
std::vector<VertexMask> canonical_classes(const Graph& g, const ListAssignment& lists,
                                          const EnumerationOptions& opts = {});
/// Same, over an explicit permutation set (which must contain the identity).
std::vector<VertexMask> canonical_classes(const ListAssignment& lists, const std::vector<std::vector<int>>& perms);

enum class Visit { Continue, Stop };

using LeafVisitor = std::function<Visit(const ColumnAssignment&)>;
/// Called with per-vertex lists (bit = class index in placement order) once
/// every vertex has at least one color. Returning true skips the subtree.
using PrunePredicate = std::function<bool(std::span<const std::uint64_t>)>;

/// Sequential enumeration in deterministic order.
EnumerationStats enumerate_assignments(const Graph& g, const IntegerPartition& lambda, const LeafVisitor& visit,
                                       const PrunePredicate& prune = {}, const EnumerationOptions& opts = {});

struct UncolorableSearch {
    std::optional<ColumnAssignment> bad; // first uncolorable class in enumeration order
    EnumerationStats stats;
};

/// Looks for an assignment with no proper coloring. Subtrees whose partial
/// lists already admit a proper coloring are skipped, since adding colors
/// cannot destroy a coloring. With several workers the top-level branches
/// are searched concurrently and merged in enumeration order, so the
/// result and statistics do not depend on the worker count.
UncolorableSearch find_uncolorable(const Graph& g, const IntegerPartition& lambda,
                                   const EnumerationOptions& opts = {});

} // namespace strictcol
