#include "strictcol/strict.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "strictcol/error.hpp"
#include "strictcol/list_color.hpp"

namespace strictcol {

namespace {

using Pair = std::vector<int>;

void require_k(int k)
{
    if (k < 3)
        throw PreconditionError("strict k-colorability of complete k-partite graphs needs k >= 3");
}

std::vector<int> range(int lo, int hi)
{
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c)
        out.push_back(c);
    return out;
}

std::vector<int> with(Pair p, const std::vector<int>& extra)
{
    p.insert(p.end(), extra.begin(), extra.end());
    return p;
}

// Singleton groups {first}, {first+1}, ..., {last}.
std::vector<std::vector<int>> singletons(int first, int last)
{
    std::vector<std::vector<int>> out;
    for (int c = first; c <= last; ++c)
        out.push_back({c});
    return out;
}

std::vector<int> part_offsets(const PartSizes& sizes)
{
    std::vector<int> off{0};
    for (int s : sizes.sizes())
        off.push_back(off.back() + s);
    return off;
}

// The shared layout of the K_{2,4,6*(k-2)} and K_{2,5*(k-1)} witnesses.
LambdaAssignment two_four_family(int k, const std::vector<std::vector<Pair>>& part_pairs)
{
    const std::vector<int> a = range(5, k + 2);
    std::vector<std::vector<int>> lists;
    for (const auto& part : part_pairs)
        for (const auto& p : part)
            lists.push_back(with(p, a));
    std::vector<std::vector<int>> groups{{1, 2, 3, 4}};
    for (auto& s : singletons(5, k + 2))
        groups.push_back(std::move(s));
    return LambdaAssignment{ListAssignment(std::move(lists)), ColorGrouping{std::move(groups)},
                            IntegerPartition::near_coloring(k)};
}

const std::vector<Pair> kMixed{{1, 3}, {1, 4}, {2, 3}, {2, 4}};

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const std::vector<int>& sorted, int c) { return std::binary_search(sorted.begin(), sorted.end(), c); }

} // namespace

std::string to_string(StrictFamily f)
{
    switch (f) {
    case StrictFamily::K3k:
        return "K3k";
    case StrictFamily::K246:
        return "K246";
    case StrictFamily::K255:
        return "K255";
    }
    return "?";
}

PartSizes family_sizes(StrictFamily f, int k)
{
    require_k(k);
    switch (f) {
    case StrictFamily::K3k:
        return PartSizes(std::vector<int>(static_cast<std::size_t>(k), 3));
    case StrictFamily::K246: {
        std::vector<int> s{2, 4};
        s.resize(static_cast<std::size_t>(k), 6);
        return PartSizes(std::move(s));
    }
    case StrictFamily::K255: {
        std::vector<int> s{2};
        s.resize(static_cast<std::size_t>(k), 5);
        return PartSizes(std::move(s));
    }
    }
    throw PreconditionError("unknown family");
}

LambdaAssignment witness_k3k(int k)
{
    require_k(k);
    const std::vector<int> a = range(3, k);
    std::vector<std::vector<int>> lists;
    for (int part = 0; part < k; ++part)
        for (const Pair& p : {Pair{0, 1}, Pair{0, 2}, Pair{1, 2}})
            lists.push_back(with(p, a));
    std::vector<std::vector<int>> groups{{0, 1, 2}};
    for (auto& s : singletons(3, k))
        groups.push_back(std::move(s));
    return LambdaAssignment{ListAssignment(std::move(lists)), ColorGrouping{std::move(groups)},
                            IntegerPartition::near_coloring(k)};
}

LambdaAssignment witness_k246(int k)
{
    require_k(k);
    std::vector<std::vector<Pair>> parts{{{1, 2}, {3, 4}}, kMixed};
    std::vector<Pair> all_six = kMixed;
    all_six.push_back({1, 2});
    all_six.push_back({3, 4});
    for (int i = 2; i < k; ++i)
        parts.push_back(all_six);
    return two_four_family(k, parts);
}

LambdaAssignment witness_k255(int k)
{
    require_k(k);
    std::vector<std::vector<Pair>> parts{{{1, 2}, {3, 4}}};
    std::vector<Pair> five = kMixed;
    five.push_back({1, 2});
    for (int i = 1; i < k; ++i)
        parts.push_back(five);
    return two_four_family(k, parts);
}

LambdaAssignment family_witness(StrictFamily f, int k)
{
    switch (f) {
    case StrictFamily::K3k:
        return witness_k3k(k);
    case StrictFamily::K246:
        return witness_k246(k);
    case StrictFamily::K255:
        return witness_k255(k);
    }
    throw PreconditionError("unknown family");
}

LambdaAssignment extend_witness(const LambdaAssignment& base, const PartSizes& pattern, const PartSizes& host)
{
    if (pattern.k() != host.k())
        throw PreconditionError("extension needs equal part counts");
    if (base.base.vertex_count() != pattern.total())
        throw PreconditionError("assignment does not match the pattern sizes");
    for (int i = 0; i < pattern.k(); ++i)
        if (host.size(static_cast<std::size_t>(i)) < pattern.size(static_cast<std::size_t>(i)))
            throw PreconditionError("host " + host.to_string() + " does not contain pattern " + pattern.to_string());

    const auto off = part_offsets(pattern);
    std::vector<std::vector<int>> lists;
    for (int i = 0; i < pattern.k(); ++i) {
        const auto p = static_cast<std::size_t>(i);
        for (int j = 0; j < host.size(p); ++j) {
            const int src = j < pattern.size(p) ? off[p] + j : off[p];
            lists.push_back(base.base.list(src));
        }
    }
    return LambdaAssignment{ListAssignment(std::move(lists)), base.grouping, base.lambda};
}

bool case1_applies(const PartSizes& sizes)
{
    if (sizes.k() < 2)
        return false;
    return sizes.size(0) == 1 || (sizes.size(0) == 2 && sizes.size(1) <= 3);
}

bool case2_applies(const PartSizes& sizes)
{
    if (sizes.k() < 3)
        return false;
    return sizes.size(0) == 2 && sizes.size(1) == 4 && sizes.size(2) <= 5;
}

PartitionabilityWitness case1_partition(const PartSizes& sizes)
{
    require_k(sizes.k());
    if (!case1_applies(sizes))
        throw PreconditionError(sizes.to_string() + " is not in Case 1 (a_1 = 1, or a_1 = 2 and a_2 <= 3)");
    const Graph g = complete_multipartite(sizes);
    const auto off = part_offsets(sizes);
    const int k = sizes.k();

    PartitionabilityWitness w{IntegerPartition::near_coloring(k), {}};
    for (int i = 2; i < k; ++i) {
        PartitionBlock b;
        b.k = 1;
        b.vertices = range(off[static_cast<std::size_t>(i)], off[static_cast<std::size_t>(i) + 1] - 1);
        auto ev = certify_block(g, b.vertices, 1);
        check_invariant(ev.has_value(), "a part is not independent");
        b.evidence = *ev;
        w.blocks.push_back(std::move(b));
    }
    PartitionBlock pair;
    pair.k = 2;
    pair.vertices = range(0, off[2] - 1);
    auto ev = certify_block(g, pair.vertices, 2);
    check_invariant(ev.has_value(), "V_1 ∪ V_2 failed the 2-choosability test");
    pair.evidence = *ev;
    if (pair.vertices.size() <= 5) {
        ChoosabilityVerdict v = k_choosable(g.induced(pair.vertices), 2);
        check_invariant(v.choosable, "exhaustive search disagrees with the core test on V_1 ∪ V_2");
        pair.classes_examined = v.classes_examined;
    }
    w.blocks.push_back(std::move(pair));
    return w;
}

Case2Transcript case2_color(const PartSizes& sizes, const LambdaAssignment& a)
{
    require_k(sizes.k());
    if (!case2_applies(sizes))
        throw PreconditionError(sizes.to_string() + " is not in Case 2 (a_1 = 2, a_2 = 4, a_3 <= 5)");
    const int k = sizes.k();
    if (a.base.vertex_count() != sizes.total())
        throw PreconditionError("assignment does not match the part sizes");
    if (a.lambda != IntegerPartition::near_coloring(k))
        throw PreconditionError("assignment is not a " + IntegerPartition::near_coloring(k).braced() + "-assignment");
    const LambdaReport report = validate_lambda(a);
    if (!report.valid)
        throw PreconditionError("invalid lambda-assignment: " + report.violations.front().message);

    const auto by_part = groups_by_part(report);
    auto group = [&](std::size_t part_index) {
        auto g = a.grouping.groups[static_cast<std::size_t>(by_part[part_index])];
        std::sort(g.begin(), g.end());
        return g;
    };
    const std::vector<int> c1 = group(static_cast<std::size_t>(k - 2));
    const auto off = part_offsets(sizes);
    auto verts = [&](int part) {
        return range(off[static_cast<std::size_t>(part)], off[static_cast<std::size_t>(part) + 1] - 1);
    };
    auto c1_list = [&](int v) { return intersect(a.base.list(v), c1); };

    std::vector<int> color(static_cast<std::size_t>(sizes.total()), -1);
    // Part p (0-based, p >= 2) uses the singleton group of canonical part p-2,
    // which is C_{p} in the 1-based naming where C_1 is the pair group.
    auto color_singleton = [&](int part, int from_part_group) {
        const auto s = group(static_cast<std::size_t>(from_part_group));
        for (int v : verts(part)) {
            auto hit = intersect(a.base.list(v), s);
            check_invariant(hit.size() == 1, "singleton group meets a list more than once");
            color[static_cast<std::size_t>(v)] = hit.front();
        }
    };
    auto try_c1 = [&](int p, int q) {
        std::vector<std::vector<int>> lists;
        std::vector<int> vs = verts(p);
        for (int v : verts(q))
            vs.push_back(v);
        for (int v : vs)
            lists.push_back(c1_list(v));
        ColorResult r = l_color_multipartite(
            PartSizes({sizes.size(static_cast<std::size_t>(p)), sizes.size(static_cast<std::size_t>(q))}),
            ListAssignment(std::move(lists)));
        if (!r.coloring)
            return false;
        for (std::size_t i = 0; i < vs.size(); ++i)
            color[static_cast<std::size_t>(vs[i])] = r.coloring->colors[i];
        return true;
    };

    Case2Transcript t;
    for (int p = 2; p < k; ++p)
        color_singleton(p, p - 2);

    const std::vector<int> v1 = verts(0);
    const std::vector<int> x = c1_list(v1[0]);
    const std::vector<int> y = c1_list(v1[1]);
    // Whether `lists` holds every mixed pair {x_i, y_j}; returns the vertex
    // chosen for each pair, or empty.
    auto mixed_cover = [&](const std::vector<int>& vs) {
        std::vector<int> chosen;
        std::vector<bool> used(vs.size(), false);
        for (int xi : x)
            for (int yj : y) {
                std::vector<int> want{std::min(xi, yj), std::max(xi, yj)};
                bool found = false;
                for (std::size_t i = 0; i < vs.size() && !found; ++i)
                    if (!used[i] && c1_list(vs[i]) == want) {
                        used[i] = found = true;
                        chosen.push_back(vs[i]);
                    }
                if (!found)
                    return std::vector<int>{};
            }
        return chosen;
    };
    auto disjoint = [&] { return intersect(x, y).empty(); };

    Case2Round r1{1, 2, {0, 1}, try_c1(0, 1), false};
    if (r1.colored) {
        t.rounds.push_back(r1);
        t.final_step = 1;
        t.final = ColoringWitness{color};
        check_invariant(validate_coloring(complete_multipartite(sizes), a.base, t.final), "step 1 coloring is not proper");
        return t;
    }
    r1.hj_pattern = disjoint() && mixed_cover(verts(1)).size() == 4;
    check_invariant(r1.hj_pattern, "C_1 on (V_1, V_2) is uncolorable but not the bad K_{2,4} pattern");
    t.rounds.push_back(r1);

    // Step 2: the C_2 colors move from V_3 to V_2.
    for (int v : verts(2))
        color[static_cast<std::size_t>(v)] = -1;
    color_singleton(1, 0);
    Case2Round r2{2, 1, {0, 2}, try_c1(0, 2), false};
    if (r2.colored) {
        t.rounds.push_back(r2);
        t.final_step = 2;
        t.final = ColoringWitness{color};
        check_invariant(validate_coloring(complete_multipartite(sizes), a.base, t.final), "step 2 coloring is not proper");
        return t;
    }
    const std::vector<int> v3 = verts(2);
    const std::vector<int> mixed3 = mixed_cover(v3);
    r2.hj_pattern = mixed3.size() == 4;
    check_invariant(r2.hj_pattern, "C_1 on (V_1, V_3) is uncolorable but V_3 lacks a mixed pair");
    t.rounds.push_back(r2);

    // Step 3: the C_2 colors move on to V_1; C_1 is split between V_2 and V_3.
    for (int v : verts(1))
        color[static_cast<std::size_t>(v)] = -1;
    color_singleton(0, 0);
    std::vector<int> extra_vertices;
    for (int v : v3)
        if (std::find(mixed3.begin(), mixed3.end(), v) == mixed3.end())
            extra_vertices.push_back(v);
    check_invariant(extra_vertices.size() <= 1, "V_3 has more than five vertices");

    auto pick = [&](int v, const std::vector<int>& side) {
        auto hit = intersect(c1_list(v), side);
        check_invariant(!hit.empty(), "list misses the chosen side");
        color[static_cast<std::size_t>(v)] = hit.front();
    };
    bool v3_from_x = true;
    if (extra_vertices.empty()) {
        t.branch = "no-extra";
    } else {
        t.extra = c1_list(extra_vertices.front());
        if (contains(t.extra, x.front()))
            t.branch = "1-in-ab";
        else if (!intersect(t.extra, x).empty())
            t.branch = "2-in-ab";
        else {
            t.branch = "otherwise";
            v3_from_x = false;
        }
    }
    for (int v : verts(1))
        pick(v, v3_from_x ? y : x);
    for (int v : mixed3)
        pick(v, v3_from_x ? x : y);
    if (!extra_vertices.empty()) {
        if (v3_from_x)
            pick(extra_vertices.front(), x);
        else
            color[static_cast<std::size_t>(extra_vertices.front())] = t.extra.front();
    }
    t.rounds.push_back(Case2Round{3, 0, {1, 2}, true, false});
    t.final_step = 3;
    t.final = ColoringWitness{color};
    check_invariant(validate_coloring(complete_multipartite(sizes), a.base, t.final), "step 3 coloring is not proper");
    return t;
}

LambdaAssignment case2_demo_assignment(const PartSizes& sizes)
{
    require_k(sizes.k());
    if (!case2_applies(sizes))
        throw PreconditionError(sizes.to_string() + " is not in Case 2");
    const int k = sizes.k();
    std::vector<std::vector<Pair>> parts{{{1, 2}, {3, 4}}, kMixed};
    std::vector<Pair> third = kMixed;
    third.push_back({1, 2});
    third.resize(static_cast<std::size_t>(sizes.size(2)));
    parts.push_back(third);
    std::vector<Pair> six = kMixed;
    six.push_back({1, 2});
    six.push_back({3, 4});
    for (int i = 3; i < k; ++i) {
        std::vector<Pair> part;
        for (int j = 0; j < sizes.size(static_cast<std::size_t>(i)); ++j)
            part.push_back(six[static_cast<std::size_t>(j) % six.size()]);
        parts.push_back(part);
    }
    return two_four_family(k, parts);
}

std::string to_string(StrictReason r)
{
    switch (r) {
    case StrictReason::ContainsK3k:
        return "contains-K3k";
    case StrictReason::ContainsK246:
        return "contains-K246";
    case StrictReason::ContainsK255:
        return "contains-K255";
    case StrictReason::Case1:
        return "case1";
    case StrictReason::Case2:
        return "case2";
    case StrictReason::Search:
        return "search";
    }
    return "?";
}

StrictDecision decide_strict_cmp(const PartSizes& sizes)
{
    const int k = sizes.k();
    require_k(k);
    StrictDecision d;
    d.sizes = sizes;
    d.k = k;

    std::optional<StrictFamily> hit;
    for (StrictFamily f : {StrictFamily::K3k, StrictFamily::K246, StrictFamily::K255})
        if (!hit && contains_parts(sizes, family_sizes(f, k)))
            hit = f;
    const bool c1 = case1_applies(sizes);
    const bool c2 = case2_applies(sizes);
    check_invariant(int(hit.has_value()) + int(c1) + int(c2) == 1,
                    "case split is not exclusive and total for " + sizes.to_string());

    if (hit) {
        const PartSizes pattern = family_sizes(*hit, k);
        LambdaAssignment lifted = extend_witness(family_witness(*hit, k), pattern, sizes);
        check_invariant(validate_lambda(lifted).valid, "extended witness is not a lambda_k-assignment");
        ColorResult r = l_color_multipartite(sizes, lifted.base);
        check_invariant(!r.colorable(), "extended witness is colorable");
        d.strict = true;
        d.reason = *hit == StrictFamily::K3k    ? StrictReason::ContainsK3k
                   : *hit == StrictFamily::K246 ? StrictReason::ContainsK246
                                                : StrictReason::ContainsK255;
        d.certificate = BadAssignmentWitness{std::move(lifted), r.nodes_searched};
    } else if (c1) {
        d.reason = StrictReason::Case1;
        d.certificate = case1_partition(sizes);
    } else {
        d.reason = StrictReason::Case2;
        LambdaAssignment demo = case2_demo_assignment(sizes);
        d.certificate = case2_color(sizes, demo);
        d.case2_input = std::move(demo);
        d.note = "every lambda_k-assignment is colored by the Case-2 procedure; transcript shown for a worst case";
    }
    return d;
}

StrictDecision decide_strict_search(const Graph& g, int k, int bound, const EnumerationOptions& opts)
{
    if (k < 1)
        throw PreconditionError("k must be positive");
    StrictDecision d;
    d.k = k;
    d.reason = StrictReason::Search;
    if (g.part_label()) {
        std::vector<int> s;
        for (const auto& p : g.parts())
            s.push_back(static_cast<int>(p.size()));
        if (!s.empty())
            d.sizes = PartSizes(std::move(s));
    }
    try {
        d.chromatic = chromatic_number(g);
    } catch (const BoundError& e) {
        d.decided = false;
        d.note = e.what();
        return d;
    }
    if (*d.chromatic != k) {
        d.note = "chromatic number is " + std::to_string(*d.chromatic) + ", not " + std::to_string(k);
        return d;
    }
    if (k == 1) {
        // {1} is the only partition of 1.
        d.strict = true;
        d.note = "edgeless graph";
        return d;
    }
    LambdaVerdict v = lambda_choosable(g, IntegerPartition::near_coloring(k), bound, opts);
    d.classes_examined = v.classes_examined;
    switch (v.decision) {
    case Decision::NotChoosable:
        d.strict = true;
        d.certificate = std::move(*v.bad);
        break;
    case Decision::Choosable:
        if (v.partition)
            d.certificate = std::move(*v.partition);
        d.note = "lambda_k-choosable (" + to_string(v.provenance) + ")";
        break;
    case Decision::Undecided:
        d.decided = false;
        d.note = v.note;
        break;
    }
    return d;
}

bool strictly_1_colorable(const Graph& g) { return g.n() > 0 && g.edge_count() == 0; }

bool strictly_2_colorable(const Graph& g)
{
    if (g.edge_count() == 0)
        return false;
    std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (VertexMask nb = g.neighbors(u); nb; nb &= nb - 1) {
                int w = std::countr_zero(nb);
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return !two_choosable_fast(g);
}

std::vector<ListAssignment> hoffman_johnson_enumerate(int m, int n, int bound)
{
    if (m < 1 || n < 1)
        throw PreconditionError("part sizes must be positive");
    const PartSizes sizes({m, n});
    const Graph g = complete_multipartite(sizes);
    if (g.n() * m > bound)
        throw BoundError("n*m = " + std::to_string(g.n() * m) + " exceeds the exhaustive bound " +
                         std::to_string(bound));

    std::vector<ListAssignment> found;
    enumerate_assignments(
        g, IntegerPartition({m}),
        [&](const ColumnAssignment& c) {
            ListAssignment lists = c.lists();
            if (!l_color_multipartite(sizes, lists).colorable())
                found.push_back(std::move(lists));
            return Visit::Continue;
        },
        [&](std::span<const std::uint64_t> partial) {
            std::uint64_t nodes = 0;
            return mask_colorable(g, partial, nodes);
        });

    // The enumerator also identifies the two parts when m = n; split those
    // orbits back into classes under within-part permutations only.
    std::vector<std::vector<int>> within;
    const auto& label = *g.part_label();
    for (auto& perm : vertex_symmetries(g, {})) {
        bool keeps = true;
        for (std::size_t v = 0; v < perm.size() && keeps; ++v)
            keeps = label[v] == label[static_cast<std::size_t>(perm[v])];
        if (keeps)
            within.push_back(std::move(perm));
    }

    std::vector<ListAssignment> candidates = found;
    if (m == n)
        for (const auto& lists : found) {
            std::vector<std::vector<int>> swapped(lists.lists().begin() + m, lists.lists().end());
            swapped.insert(swapped.end(), lists.lists().begin(), lists.lists().begin() + m);
            candidates.emplace_back(std::move(swapped));
        }
    std::vector<ListAssignment> out;
    std::set<std::vector<VertexMask>> seen;
    for (auto& lists : candidates)
        if (seen.insert(canonical_classes(lists, within)).second)
            out.push_back(std::move(lists));
    return out;
}

ListAssignment hoffman_johnson_k24()
{
    return ListAssignment({{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

} // namespace strictcol
