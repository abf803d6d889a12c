#pragma once

// Brute-force reference implementations. None of these call into the
// library's search code; they only use its data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "strictcol/graph.hpp"
#include "strictcol/list_assignment.hpp"
#include "strictcol/partition.hpp"

namespace oracle {

using strictcol::Graph;
using strictcol::IntegerPartition;
using strictcol::ListAssignment;

// p(k) by Euler's pentagonal number recurrence.
inline std::uint64_t partition_count(int k)
{
    std::vector<std::int64_t> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= k; ++n) {
        std::int64_t s = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > n)
                break;
            const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                s += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = s;
    }
    return static_cast<std::uint64_t>(p[static_cast<std::size_t>(k)]);
}

inline std::uint64_t bell(int n)
{
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

// Calls f(slot) for every map from `m` items to `t` slots.
inline void for_each_map(int m, int t, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> slot(static_cast<std::size_t>(m), 0);
    while (true) {
        f(slot);
        int i = 0;
        for (; i < m; ++i) {
            if (++slot[static_cast<std::size_t>(i)] < t)
                break;
            slot[static_cast<std::size_t>(i)] = 0;
        }
        if (i == m)
            return;
    }
}

// Every way to send hi's parts to lo's slots; slot i must be non-empty and
// sum to at least lo_i.
inline bool leq(const IntegerPartition& lo, const IntegerPartition& hi)
{
    bool found = false;
    const int t = lo.part_count();
    for_each_map(hi.part_count(), t, [&](const std::vector<int>& slot) {
        if (found)
            return;
        std::vector<int> sum(static_cast<std::size_t>(t), 0), cnt(static_cast<std::size_t>(t), 0);
        for (std::size_t j = 0; j < slot.size(); ++j) {
            sum[static_cast<std::size_t>(slot[j])] += hi.part(j);
            ++cnt[static_cast<std::size_t>(slot[j])];
        }
        bool ok = true;
        for (int i = 0; i < t && ok; ++i)
            ok = cnt[static_cast<std::size_t>(i)] > 0 && sum[static_cast<std::size_t>(i)] >= lo.part(static_cast<std::size_t>(i));
        found = ok;
    });
    return found;
}

inline bool refines(const IntegerPartition& fine, const IntegerPartition& coarse)
{
    if (fine.weight() != coarse.weight())
        return false;
    bool found = false;
    const int t = coarse.part_count();
    for_each_map(fine.part_count(), t, [&](const std::vector<int>& slot) {
        if (found)
            return;
        std::vector<int> sum(static_cast<std::size_t>(t), 0);
        for (std::size_t j = 0; j < slot.size(); ++j)
            sum[static_cast<std::size_t>(slot[j])] += fine.part(j);
        bool ok = true;
        for (int i = 0; i < t && ok; ++i)
            ok = sum[static_cast<std::size_t>(i)] == coarse.part(static_cast<std::size_t>(i));
        found = ok;
    });
    return found;
}

// Tries all c^n colorings.
inline bool colorable_with(const Graph& g, int c)
{
    const int n = g.n();
    if (n == 0)
        return true;
    if (c == 0)
        return false;
    bool found = false;
    for_each_map(n, c, [&](const std::vector<int>& col) {
        if (found)
            return;
        for (auto [u, v] : g.edges())
            if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)])
                return;
        found = true;
    });
    return found;
}

inline int chromatic(const Graph& g)
{
    int c = 0;
    while (!colorable_with(g, c))
        ++c;
    return c;
}

// Tries every choice from the product of the lists.
inline bool list_colorable(const Graph& g, const ListAssignment& lists)
{
    const int n = g.n();
    std::vector<int> col(static_cast<std::size_t>(n));
    std::function<bool(int)> go = [&](int v) {
        if (v == n)
            return true;
        for (int c : lists.list(v)) {
            bool clash = false;
            for (int u = 0; u < v && !clash; ++u)
                clash = g.adjacent(u, v) && col[static_cast<std::size_t>(u)] == c;
            if (clash)
                continue;
            col[static_cast<std::size_t>(v)] = c;
            if (go(v + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

// Graph on n vertices whose edge set is given by the bits of `code` over
// the pairs (0,1),(0,2),...,(n-2,n-1).
inline Graph graph_from_code(int n, std::uint32_t code)
{
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1U)
                g.add_edge(u, v);
    return g;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Smallest edge code over all vertex relabelings.
inline std::uint32_t canonical_code(const Graph& g)
{
    const int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0U;
    do {
        std::uint32_t code = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    code |= 1U << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Adjacency-preserving permutations.
inline std::vector<std::vector<int>> automorphisms(const Graph& g)
{
    const int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = g.adjacent(u, v) == g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok)
            out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Color-class multiset of a list assignment under a vertex permutation.
inline std::vector<std::uint64_t> class_multiset(const ListAssignment& lists, const std::vector<int>& perm)
{
    std::map<int, std::uint64_t> by_color;
    for (int v = 0; v < lists.vertex_count(); ++v)
        for (int c : lists.list(v))
            by_color[c] |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
    std::vector<std::uint64_t> out;
    for (auto [c, m] : by_color)
        out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of k-assignment classes of g (colors renamed freely, vertices
// moved by `perms`), by listing every assignment over colors 0..n*k-1.
inline std::size_t count_k_assignment_classes(const Graph& g, int k, const std::vector<std::vector<int>>& perms)
{
    const int n = g.n();
    const int colors = n * k;
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t m = 0; m < (1U << colors); ++m)
        if (std::popcount(m) == k) {
            std::vector<int> s;
            for (int c = 0; c < colors; ++c)
                if ((m >> c) & 1U)
                    s.push_back(c);
            subsets.push_back(s);
        }
    std::set<std::vector<std::uint64_t>> seen;
    for_each_map(n, static_cast<int>(subsets.size()), [&](const std::vector<int>& pick) {
        std::vector<std::vector<int>> lists;
        for (int i : pick)
            lists.push_back(subsets[static_cast<std::size_t>(i)]);
        ListAssignment a(lists);
        std::vector<std::uint64_t> best;
        for (const auto& p : perms)
            best = std::max(best, class_multiset(a, p));
        seen.insert(best);
    });
    return seen.size();
}

inline std::vector<int> identity(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// k-choosability by trying every k-assignment over colors 0..n*k-1.
inline bool k_choosable(const Graph& g, int k)
{
    const int n = g.n();
    const int colors = n * k;
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t m = 0; m < (1U << colors); ++m)
        if (std::popcount(m) == k) {
            std::vector<int> s;
            for (int c = 0; c < colors; ++c)
                if ((m >> c) & 1U)
                    s.push_back(c);
            subsets.push_back(s);
        }
    bool ok = true;
    for_each_map(n, static_cast<int>(subsets.size()), [&](const std::vector<int>& pick) {
        if (!ok)
            return;
        std::vector<std::vector<int>> lists;
        for (int i : pick)
            lists.push_back(subsets[static_cast<std::size_t>(i)]);
        ok = list_colorable(g, ListAssignment(lists));
    });
    return ok;
}

} // namespace oracle
