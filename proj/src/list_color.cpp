#include "strictcol/list_color.hpp"

#include <algorithm>
#include <bit>

#include "strictcol/error.hpp"

namespace strictcol {

namespace {

void check_k_bound(const Graph& g, int k, int bound)
{
    if (k < 1)
        throw PreconditionError("list size must be positive");
    if (g.n() * k > bound)
        throw BoundError("n*k = " + std::to_string(g.n() * k) + " exceeds the exhaustive bound " +
                         std::to_string(bound));
}

int core_degree(const Graph& g, VertexMask core, int v) { return std::popcount(g.neighbors(v) & core); }

} // namespace

std::vector<ListAssignment> enumerate_k_assignments(const Graph& g, int k, int bound, const EnumerationOptions& opts)
{
    check_k_bound(g, k, bound);
    std::vector<ListAssignment> out;
    enumerate_assignments(
        g, IntegerPartition({k}),
        [&](const ColumnAssignment& a) {
            out.push_back(a.lists());
            return Visit::Continue;
        },
        {}, opts);
    return out;
}

ChoosabilityVerdict k_choosable(const Graph& g, int k, int bound, const EnumerationOptions& opts)
{
    check_k_bound(g, k, bound);
    UncolorableSearch search = find_uncolorable(g, IntegerPartition({k}), opts);
    ChoosabilityVerdict v;
    v.choosable = !search.bad;
    if (search.bad)
        v.bad = search.bad->lists();
    v.classes_examined = search.stats.classes;
    v.nodes_searched = search.stats.nodes + search.stats.solver_nodes;
    return v;
}

ChoiceNumber choice_number(const Graph& g, int max_k, int bound, const EnumerationOptions& opts)
{
    ChoiceNumber result;
    for (int k = 1; k <= max_k; ++k) {
        if (k_choosable(g, k, bound, opts).choosable) {
            result.value = k;
            result.lower_bound = k;
            return result;
        }
        result.lower_bound = k + 1;
    }
    return result;
}

VertexMask core_vertices(const Graph& g)
{
    VertexMask core = g.n() == 64 ? ~VertexMask{0} : ((VertexMask{1} << g.n()) - 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexMask c = core; c; c &= c - 1) {
            int v = std::countr_zero(c);
            if (core_degree(g, core, v) <= 1) {
                core &= ~(VertexMask{1} << v);
                changed = true;
            }
        }
    }
    return core;
}

bool two_choosable_fast(const Graph& g)
{
    const VertexMask core = core_vertices(g);
    std::vector<int> kept;
    for (VertexMask c = core; c; c &= c - 1)
        kept.push_back(std::countr_zero(c));
    const Graph h = g.induced(kept);

    for (const auto& comp : connected_components(h)) {
        if (comp.size() == 1)
            continue; // cannot happen for a core, kept for isolated leftovers
        std::vector<int> deg3;
        bool ok = true;
        for (int v : comp) {
            int d = h.degree(v);
            if (d == 3)
                deg3.push_back(v);
            else if (d != 2)
                ok = false;
        }
        if (!ok)
            return false;
        if (deg3.empty()) {
            if (comp.size() % 2 != 0)
                return false; // odd cycle
            continue;
        }
        if (deg3.size() != 2)
            return false;
        // Walk the three branches out of deg3[0]; each must end at deg3[1].
        const int from = deg3[0], to = deg3[1];
        std::vector<int> lengths;
        for (VertexMask nb = h.neighbors(from); nb; nb &= nb - 1) {
            int prev = from, cur = std::countr_zero(nb), len = 1;
            while (cur != to && cur != from) {
                VertexMask next = h.neighbors(cur) & ~(VertexMask{1} << prev);
                prev = cur;
                cur = std::countr_zero(next);
                ++len;
            }
            if (cur != to)
                return false;
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end());
        if (lengths.size() != 3 || lengths[0] != 2 || lengths[1] != 2 || lengths[2] % 2 != 0)
            return false;
    }
    return true;
}

int degeneracy(const Graph& g)
{
    VertexMask alive = g.n() == 64 ? ~VertexMask{0} : ((VertexMask{1} << g.n()) - 1);
    int best = 0;
    while (alive) {
        int pick = -1, pick_deg = 1 << 30;
        for (VertexMask a = alive; a; a &= a - 1) {
            int v = std::countr_zero(a);
            int d = std::popcount(g.neighbors(v) & alive);
            if (d < pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        best = std::max(best, pick_deg);
        alive &= ~(VertexMask{1} << pick);
    }
    return best;
}

} // namespace strictcol
