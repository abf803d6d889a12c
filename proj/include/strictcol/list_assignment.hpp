#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "strictcol/graph.hpp"

namespace strictcol {

/// A list of allowed colors per vertex. Colors are non-negative integers;
/// each list is kept sorted and free of duplicates.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> lists);

    int vertex_count() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(int v) const { return lists_[v]; }
    const std::vector<std::vector<int>>& lists() const { return lists_; }
    bool contains(int v, int color) const;
    /// k when every list has exactly k colors.
    std::optional<int> uniform_size() const;
    /// Every color used by some list, sorted.
    std::vector<int> colors() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<int>> lists_;
};

struct ColoringWitness {
    std::vector<int> colors;
};

/// Outcome of an L-colorability search. `coloring` is absent when the
/// search was exhausted without finding one.
struct ColorResult {
    std::optional<ColoringWitness> coloring;
    std::uint64_t nodes_searched = 0;

    bool colorable() const { return coloring.has_value(); }
};

/// Whether `w` is a proper coloring of `g` drawing every color from `lists`.
bool validate_coloring(const Graph& g, const ListAssignment& lists, const ColoringWitness& w);

/// Complete backtracking L-coloring: most constrained vertex first, with
/// neighbor color removal.
ColorResult l_color(const Graph& g, const ListAssignment& lists);

/// L-coloring of a complete multipartite graph by color ownership: every
/// color is given to at most one part, and a vertex is colorable iff some
/// color in its list belongs to its own part.
ColorResult l_color_multipartite(const PartSizes& sizes, const ListAssignment& lists);

/// Bit-parallel L-colorability for lists over at most 64 colors; bit c of
/// `lists[v]` means color c is available to v. Used by the exhaustive
/// searches. On success `colors_out` (if non-null) receives a color index
/// per vertex.
bool mask_colorable(const Graph& g, std::span<const std::uint64_t> lists, std::uint64_t& nodes,
                    std::vector<int>* colors_out = nullptr);

} // namespace strictcol
