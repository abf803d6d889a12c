#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strictcol {

/// A multiset of positive integers, held in non-decreasing order.
///
/// The weight is the integer being partitioned and part_count is the number
/// of parts. Equality and ordering are on the canonical sequence.
class IntegerPartition {
public:
    /// Sorts `parts`. Throws PreconditionError if empty or any part < 1.
    explicit IntegerPartition(std::vector<int> parts);

    /// Parses `n` / `n*m` terms separated by commas, e.g. "1*4,2".
    static IntegerPartition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int part(std::size_t i) const { return parts_[i]; }
    int weight() const { return weight_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    /// Canonical text: comma-separated parts, e.g. "1,1,2".
    std::string to_string() const;
    /// Canonical text in braces, e.g. "{1,1,2}".
    std::string braced() const;

    /// The partition {1*(k-2), 2} of k, for k >= 2.
    static IntegerPartition near_coloring(int k);
    /// The partition {1*k}.
    static IntegerPartition all_ones(int k);

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Free-function spellings of the parse/format pair.
IntegerPartition parse_partition(std::string_view text);
std::string format_partition(const IntegerPartition& p);

/// How the parts of a finer partition are grouped into a coarser one.
///
/// `assignment[j]` is the group index receiving the finer partition's
/// part j. For the order relation, `intermediate` holds the group sums.
struct GroupingWitness {
    std::vector<int> assignment;
    std::optional<IntegerPartition> intermediate;
};

/// Returns true iff `w` groups the parts of `fine` into `targets.size()`
/// non-empty groups whose sums equal `targets` exactly (exact = true) or
/// are at least `targets` (exact = false).
bool check_grouping(const IntegerPartition& fine, std::span<const int> targets,
                    const GroupingWitness& w, bool exact);

inline constexpr int kDefaultPartitionBound = 30;
inline constexpr int kDefaultHasseBound = 12;

/// All partitions of k, lexicographic on canonical form.
std::vector<IntegerPartition> enumerate_partitions(int k, int bound = kDefaultPartitionBound);

/// Witness that `fine` is obtained from `coarse` by subdividing parts.
/// Group i of the witness sums exactly to coarse's part i.
std::optional<GroupingWitness> is_refinement(const IntegerPartition& fine,
                                             const IntegerPartition& coarse);

/// Zhu's order: present iff `lo` <= `hi`.
///
/// hi's parts are split into part_count(lo) non-empty groups, group i
/// summing to at least lo's part i. Among valid groupings the one whose
/// group-sum vector is lexicographically least is returned (ties broken by
/// the lexicographically first assignment), so that {3,3} <= {1,1,2,4}
/// reports the intermediate {3,5}.
std::optional<GroupingWitness> leq(const IntegerPartition& lo, const IntegerPartition& hi);

/// Covering relation of the refinement order on partitions of k.
struct HasseDiagram {
    std::vector<IntegerPartition> nodes;
    std::vector<std::pair<int, int>> edges; // coarse index -> fine index

    std::string to_dot() const;
};

HasseDiagram refinement_hasse(int k, int bound = kDefaultHasseBound);

} // namespace strictcol
