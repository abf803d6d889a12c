#include "strictcol/list_assignment.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "strictcol/error.hpp"

namespace strictcol {

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists)
    : lists_(std::move(lists))
{
    for (auto& l : lists_) {
        if (l.empty())
            throw PreconditionError("lists must be non-empty");
        for (int c : l)
            if (c < 0)
                throw PreconditionError("colors must be non-negative");
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

bool ListAssignment::contains(int v, int color) const
{
    return std::binary_search(lists_[v].begin(), lists_[v].end(), color);
}

std::optional<int> ListAssignment::uniform_size() const
{
    if (lists_.empty())
        return std::nullopt;
    std::size_t k = lists_.front().size();
    for (const auto& l : lists_)
        if (l.size() != k)
            return std::nullopt;
    return static_cast<int>(k);
}

std::vector<int> ListAssignment::colors() const
{
    std::vector<int> all;
    for (const auto& l : lists_)
        all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool validate_coloring(const Graph& g, const ListAssignment& lists, const ColoringWitness& w)
{
    if (lists.vertex_count() != g.n() || w.colors.size() != static_cast<std::size_t>(g.n()))
        return false;
    for (int v = 0; v < g.n(); ++v)
        if (!lists.contains(v, w.colors[v]))
            return false;
    return is_proper(g, w.colors);
}

namespace {

void require_cover(const Graph& g, const ListAssignment& lists)
{
    if (lists.vertex_count() != g.n())
        throw PreconditionError("list assignment covers " + std::to_string(lists.vertex_count()) +
                                " vertices, graph has " + std::to_string(g.n()));
}

// Backtracking over domains stored as `words` 64-bit words per vertex.
class DomainColorer {
public:
    DomainColorer(const Graph& g, std::size_t words, std::vector<std::uint64_t> domains)
        : g_(g)
        , words_(words)
        , n_(static_cast<std::size_t>(g.n()))
        , dom_(std::move(domains))
        , saved_((n_ + 1) * n_ * words_)
        , color_(n_, -1)
    {
    }

    bool run()
    {
        VertexMask all = n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1);
        for (std::size_t v = 0; v < n_; ++v)
            if (count(v) == 0)
                return false;
        return solve(0, all);
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& colors() const { return color_; }

private:
    int count(std::size_t v) const
    {
        int c = 0;
        for (std::size_t w = 0; w < words_; ++w)
            c += std::popcount(dom_[v * words_ + w]);
        return c;
    }

    bool solve(std::size_t depth, VertexMask uncolored)
    {
        if (!uncolored)
            return true;
        ++nodes_;
        int v = -1, best = 1 << 30;
        for (VertexMask u = uncolored; u; u &= u - 1) {
            int x = std::countr_zero(u);
            int c = count(static_cast<std::size_t>(x));
            if (c < best) {
                best = c;
                v = x;
                if (c <= 1)
                    break;
            }
        }
        if (best == 0)
            return false;
        const VertexMask rest = uncolored & ~(VertexMask{1} << v);
        const VertexMask nbrs = g_.neighbors(v) & rest;
        std::uint64_t* save = &saved_[depth * n_ * words_];
        std::copy(dom_.begin(), dom_.end(), save);
        for (std::size_t w = 0; w < words_; ++w) {
            for (std::uint64_t bits = save[static_cast<std::size_t>(v) * words_ + w]; bits; bits &= bits - 1) {
                const int bit = std::countr_zero(bits);
                const std::uint64_t clear = ~(std::uint64_t{1} << bit);
                bool dead = false;
                for (VertexMask nb = nbrs; nb; nb &= nb - 1) {
                    std::size_t u = static_cast<std::size_t>(std::countr_zero(nb));
                    dom_[u * words_ + w] &= clear;
                    if (count(u) == 0) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) {
                    color_[v] = static_cast<int>(w * 64) + bit;
                    if (solve(depth + 1, rest))
                        return true;
                }
                std::copy(save, save + dom_.size(), dom_.begin());
            }
        }
        color_[v] = -1;
        return false;
    }

    const Graph& g_;
    std::size_t words_;
    std::size_t n_;
    std::vector<std::uint64_t> dom_;
    std::vector<std::uint64_t> saved_;
    std::vector<int> color_;
    std::uint64_t nodes_ = 0;
};

} // namespace

bool mask_colorable(const Graph& g, std::span<const std::uint64_t> lists, std::uint64_t& nodes,
                    std::vector<int>* colors_out)
{
    DomainColorer colorer(g, 1, std::vector<std::uint64_t>(lists.begin(), lists.end()));
    bool ok = colorer.run();
    nodes += colorer.nodes();
    if (ok && colors_out)
        *colors_out = colorer.colors();
    return ok;
}

ColorResult l_color(const Graph& g, const ListAssignment& lists)
{
    require_cover(g, lists);
    const std::vector<int> palette = lists.colors();
    const std::size_t words = std::max<std::size_t>(1, (palette.size() + 63) / 64);
    std::vector<std::uint64_t> domains(static_cast<std::size_t>(g.n()) * words, 0);
    for (int v = 0; v < g.n(); ++v)
        for (int c : lists.list(v)) {
            auto idx = static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
            domains[static_cast<std::size_t>(v) * words + idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
    DomainColorer colorer(g, words, std::move(domains));
    ColorResult result;
    if (colorer.run()) {
        ColoringWitness w;
        for (int c : colorer.colors())
            w.colors.push_back(palette[static_cast<std::size_t>(c)]);
        result.coloring = std::move(w);
    }
    result.nodes_searched = colorer.nodes();
    return result;
}

ColorResult l_color_multipartite(const PartSizes& sizes, const ListAssignment& lists)
{
    if (lists.vertex_count() != sizes.total())
        throw PreconditionError("list assignment covers " + std::to_string(lists.vertex_count()) +
                                " vertices, graph has " + std::to_string(sizes.total()));
    const int n = sizes.total();
    std::vector<int> part_of;
    for (int p = 0; p < sizes.k(); ++p)
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes.size(p)), p);

    const std::vector<int> palette = lists.colors();
    auto index_of = [&](int c) {
        return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    };
    std::vector<std::vector<int>> local(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int c : lists.list(v))
            local[v].push_back(index_of(c));

    std::vector<int> owner(palette.size(), -1);
    ColorResult result;

    auto covered = [&](int v) {
        for (int c : local[v])
            if (owner[c] == part_of[v])
                return true;
        return false;
    };

    std::function<bool()> search = [&]() -> bool {
        ++result.nodes_searched;
        int pick = -1, best = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (covered(v))
                continue;
            int free = 0;
            for (int c : local[v])
                if (owner[c] < 0)
                    ++free;
            if (free < best) {
                best = free;
                pick = v;
            }
        }
        if (pick < 0)
            return true;
        if (best == 0)
            return false;
        for (int c : local[pick]) {
            if (owner[c] >= 0)
                continue;
            owner[c] = part_of[pick];
            if (search())
                return true;
            owner[c] = -1;
        }
        return false;
    };

    if (search()) {
        ColoringWitness w;
        for (int v = 0; v < n; ++v)
            for (int c : local[v])
                if (owner[c] == part_of[v]) {
                    w.colors.push_back(palette[c]);
                    break;
                }
        result.coloring = std::move(w);
    }
    return result;
}

} // namespace strictcol
