#include "strictcol/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "strictcol/error.hpp"
#include "strictcol/partition.hpp"

namespace strictcol {

PartSizes::PartSizes(std::vector<int> sizes)
    : sizes_(std::move(sizes))
{
    if (sizes_.empty())
        throw PreconditionError("part sizes must be non-empty");
    for (int s : sizes_)
        if (s < 1)
            throw PreconditionError("part sizes must be positive");
    std::sort(sizes_.begin(), sizes_.end());
}

PartSizes PartSizes::parse(std::string_view text)
{
    IntegerPartition p = IntegerPartition::parse(text);
    return PartSizes(std::vector<int>(p.parts().begin(), p.parts().end()));
}

int PartSizes::total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

std::string PartSizes::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(sizes_[i]);
    }
    return s;
}

Graph::Graph(int n)
    : n_(n)
    , adj_(static_cast<std::size_t>(std::max(n, 0)), 0)
{
    if (n < 0 || n > kMaxVertices)
        throw BoundError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw PreconditionError("edge endpoint out of range");
    if (u == v)
        throw PreconditionError("self-loops are not allowed");
    adj_[u] |= VertexMask{1} << v;
    adj_[v] |= VertexMask{1} << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const
{
    int twice = 0;
    for (VertexMask m : adj_)
        twice += std::popcount(m);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

void Graph::set_part_label(std::vector<int> label)
{
    if (label.size() != static_cast<std::size_t>(n_))
        throw PreconditionError("part label must cover every vertex");
    for (int u = 0; u < n_; ++u) {
        if (label[u] < 0)
            throw PreconditionError("part labels must be non-negative");
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v) != (label[u] != label[v]))
                throw PreconditionError("graph is not complete multipartite with the given parts");
    }
    part_label_ = std::move(label);
}

std::vector<std::vector<int>> Graph::parts() const
{
    if (!part_label_)
        return {};
    int count = 0;
    for (int p : *part_label_)
        count = std::max(count, p + 1);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (int v = 0; v < n_; ++v)
        out[(*part_label_)[v]].push_back(v);
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph complete_multipartite(const PartSizes& sizes, int bound)
{
    if (sizes.total() > bound)
        throw BoundError("complete multipartite graph has " + std::to_string(sizes.total()) +
                         " vertices, bound is " + std::to_string(bound));
    Graph g(sizes.total());
    std::vector<int> label;
    for (int p = 0; p < sizes.k(); ++p)
        label.insert(label.end(), static_cast<std::size_t>(sizes.size(p)), p);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (label[u] != label[v])
                g.add_edge(u, v);
    g.set_part_label(std::move(label));
    return g;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("cycles need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

// DSATUR-ordered backtracking: can g be colored with `k` colors?
bool k_colorable(const Graph& g, int k)
{
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::function<bool(int)> search = [&](int colored) -> bool {
        if (colored == n)
            return true;
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0)
                continue;
            std::uint64_t seen = 0;
            int deg = 0;
            for (int u = 0; u < n; ++u)
                if (g.adjacent(u, v)) {
                    if (color[u] >= 0)
                        seen |= std::uint64_t{1} << color[u];
                    else
                        ++deg;
                }
            int sat = std::popcount(seen);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int used = 0;
        for (int v = 0; v < n; ++v)
            used = std::max(used, color[v] + 1);
        // A fresh color beyond `used` is symmetric to any other fresh one.
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (g.adjacent(u, best) && color[u] == c)
                    ok = false;
            if (!ok)
                continue;
            color[best] = c;
            if (search(colored + 1))
                return true;
            color[best] = -1;
        }
        return false;
    };
    return search(0);
}

int greedy_clique(const Graph& g)
{
    int best = g.n() > 0 ? 1 : 0;
    for (int start = 0; start < g.n(); ++start) {
        VertexMask cand = g.neighbors(start);
        int size = 1;
        while (cand) {
            int pick = -1, pick_deg = -1;
            for (VertexMask c = cand; c; c &= c - 1) {
                int v = std::countr_zero(c);
                int d = std::popcount(g.neighbors(v) & cand);
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace

int chromatic_number(const Graph& g, int bound)
{
    if (g.n() == 0)
        return 0;
    if (g.part_label()) {
        int parts = 0;
        for (int p : *g.part_label())
            parts = std::max(parts, p + 1);
        return parts;
    }
    if (g.n() > bound)
        throw BoundError("generic chromatic number limited to " + std::to_string(bound) + " vertices");
    for (int k = std::max(1, greedy_clique(g));; ++k)
        if (k_colorable(g, k))
            return k;
}

bool contains_parts(const PartSizes& host, const PartSizes& pattern)
{
    if (pattern.k() > host.k() || pattern.total() > host.total())
        return false;
    if (pattern.k() == host.k()) {
        for (int i = 0; i < host.k(); ++i)
            if (host.size(i) < pattern.size(i))
                return false;
        return true;
    }
    // With fewer pattern parts, one pattern part may be spread over several
    // host parts; distinct pattern parts need disjoint host parts.
    std::vector<int> hosts(host.sizes().rbegin(), host.sizes().rend());
    std::vector<int> deficit(pattern.sizes().rbegin(), pattern.sizes().rend());
    std::function<bool(std::size_t)> place = [&](std::size_t h) -> bool {
        if (std::all_of(deficit.begin(), deficit.end(), [](int d) { return d <= 0; }))
            return true;
        if (h == hosts.size())
            return false;
        for (std::size_t p = 0; p < deficit.size(); ++p) {
            if (deficit[p] <= 0)
                continue;
            deficit[p] -= hosts[h];
            bool ok = place(h + 1);
            deficit[p] += hosts[h];
            if (ok)
                return true;
        }
        return place(h + 1);
    };
    return place(0);
}

bool embedding_oracle(const PartSizes& host, const PartSizes& pattern)
{
    if (pattern.total() > 12 || host.total() > 16)
        throw BoundError("embedding oracle limited to pattern <= 12 and host <= 16 vertices");
    const Graph h = complete_multipartite(host);
    const Graph p = complete_multipartite(pattern);
    const auto& plabel = *p.part_label();
    std::vector<int> image(static_cast<std::size_t>(p.n()), -1);
    VertexMask used = 0;
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == p.n())
            return true;
        // Vertices of one pattern part are interchangeable: map them to
        // increasing host vertices.
        int lowest = 0;
        if (v > 0 && plabel[v - 1] == plabel[v])
            lowest = image[v - 1] + 1;
        for (int x = lowest; x < h.n(); ++x) {
            if ((used >> x) & 1U)
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (p.adjacent(u, v) && !h.adjacent(image[u], x))
                    ok = false;
            if (!ok)
                continue;
            image[v] = x;
            used |= VertexMask{1} << x;
            if (extend(v + 1))
                return true;
            used &= ~(VertexMask{1} << x);
        }
        image[v] = -1;
        return false;
    };
    return extend(0);
}

bool is_proper(const Graph& g, std::span<const int> coloring)
{
    if (coloring.size() != static_cast<std::size_t>(g.n()))
        throw PreconditionError("coloring must assign a color to every vertex");
    for (int c : coloring)
        if (c < 0)
            throw PreconditionError("coloring leaves a vertex uncolored");
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<std::vector<int>> out;
    VertexMask seen = 0;
    for (int s = 0; s < g.n(); ++s) {
        if ((seen >> s) & 1U)
            continue;
        VertexMask comp = VertexMask{1} << s;
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f; f &= f - 1)
                next |= g.neighbors(std::countr_zero(f));
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        std::vector<int> vs;
        for (VertexMask c = comp; c; c &= c - 1)
            vs.push_back(std::countr_zero(c));
        out.push_back(std::move(vs));
    }
    return out;
}

} // namespace strictcol
