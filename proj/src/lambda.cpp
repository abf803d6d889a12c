#include "strictcol/lambda.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "strictcol/error.hpp"
#include "strictcol/list_color.hpp"

namespace strictcol {

LambdaReport validate_lambda(const LambdaAssignment& a)
{
    LambdaReport r;
    const auto& groups = a.grouping.groups;
    const int t = static_cast<int>(groups.size());
    const int n = a.base.vertex_count();
    auto add = [&](LambdaViolation::Kind kind, int v, int g, int expected, int actual, std::string msg) {
        r.violations.push_back(LambdaViolation{kind, v, g, expected, actual, std::move(msg)});
    };

    if (t != a.lambda.part_count())
        add(LambdaViolation::Kind::GroupCount, -1, -1, a.lambda.part_count(), t,
            "expected " + std::to_string(a.lambda.part_count()) + " groups, found " + std::to_string(t));

    std::map<int, int> group_of;
    for (int g = 0; g < t; ++g) {
        if (groups[g].empty())
            add(LambdaViolation::Kind::EmptyGroup, -1, g, 0, 0, "group " + std::to_string(g) + " is empty");
        for (int c : groups[g]) {
            auto [it, fresh] = group_of.emplace(c, g);
            if (!fresh && it->second != g)
                add(LambdaViolation::Kind::Overlap, -1, g, it->second, g,
                    "color " + std::to_string(c) + " is in groups " + std::to_string(it->second) + " and " +
                        std::to_string(g));
        }
    }

    std::map<int, bool> uncovered_seen;
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v) {
        const auto& list = a.base.list(v);
        if (static_cast<int>(list.size()) != a.lambda.weight())
            add(LambdaViolation::Kind::ListSize, v, -1, a.lambda.weight(), static_cast<int>(list.size()),
                "list of vertex " + std::to_string(v) + " has " + std::to_string(list.size()) + " colors, expected " +
                    std::to_string(a.lambda.weight()));
        for (int c : list) {
            auto it = group_of.find(c);
            if (it == group_of.end()) {
                if (!uncovered_seen[c])
                    add(LambdaViolation::Kind::Uncovered, v, -1, 0, c,
                        "color " + std::to_string(c) + " (vertex " + std::to_string(v) + ") is in no group");
                uncovered_seen[c] = true;
                continue;
            }
            ++counts[it->second][v];
        }
    }

    r.group_targets.assign(static_cast<std::size_t>(t), 0);
    bool consistent = true;
    for (int g = 0; g < t; ++g) {
        // The most common count (smallest on ties) stands as the target.
        std::map<int, int> freq;
        for (int v = 0; v < n; ++v)
            ++freq[counts[g][v]];
        int target = 0, best = -1;
        for (auto [value, f] : freq)
            if (f > best) {
                best = f;
                target = value;
            }
        r.group_targets[g] = target;
        for (int v = 0; v < n; ++v)
            if (counts[g][v] != target) {
                consistent = false;
                add(LambdaViolation::Kind::Intersection, v, g, target, counts[g][v],
                    "|L(" + std::to_string(v) + ") ∩ C_" + std::to_string(g) + "| = " + std::to_string(counts[g][v]) +
                        ", other vertices have " + std::to_string(target));
            }
    }
    if (consistent && t == a.lambda.part_count() && n > 0) {
        std::vector<int> sorted = r.group_targets;
        std::sort(sorted.begin(), sorted.end());
        if (!std::equal(sorted.begin(), sorted.end(), a.lambda.parts().begin(), a.lambda.parts().end()))
            add(LambdaViolation::Kind::CountMultiset, -1, -1, 0, 0,
                "group intersection counts do not form " + a.lambda.braced());
    }
    r.valid = r.violations.empty();
    return r;
}

std::vector<int> groups_by_part(const LambdaReport& report)
{
    std::vector<int> order(report.group_targets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return report.group_targets[x] < report.group_targets[y]; });
    return order;
}

LambdaAssignment coarsen_grouping(const LambdaAssignment& a, const IntegerPartition& coarse,
                                  const GroupingWitness& witness)
{
    const LambdaReport report = validate_lambda(a);
    if (!report.valid)
        throw PreconditionError("cannot coarsen an invalid lambda-assignment");
    if (a.lambda.weight() != coarse.weight() || !check_grouping(a.lambda, coarse.parts(), witness, true))
        throw PreconditionError("grouping witness does not show " + a.lambda.braced() + " refines " +
                                coarse.braced());
    const std::vector<int> order = groups_by_part(report);
    std::vector<std::vector<int>> merged(static_cast<std::size_t>(coarse.part_count()));
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& src = a.grouping.groups[static_cast<std::size_t>(order[r])];
        auto& dst = merged[static_cast<std::size_t>(witness.assignment[r])];
        dst.insert(dst.end(), src.begin(), src.end());
    }
    for (auto& g : merged)
        std::sort(g.begin(), g.end());
    return LambdaAssignment{a.base, ColorGrouping{std::move(merged)}, coarse};
}

LambdaAssignment to_lambda_assignment(const ColumnAssignment& columns, const IntegerPartition& lambda)
{
    return LambdaAssignment{columns.lists(), ColorGrouping{columns.color_groups()}, lambda};
}

std::vector<LambdaAssignment> enumerate_lambda_assignments(const Graph& g, const IntegerPartition& lambda, int bound,
                                                           const EnumerationOptions& opts)
{
    if (enumeration_size(g.n(), lambda) > bound)
        throw BoundError("sum of n*k_i = " + std::to_string(enumeration_size(g.n(), lambda)) +
                         " exceeds the exhaustive bound " + std::to_string(bound));
    std::vector<LambdaAssignment> out;
    enumerate_assignments(
        g, lambda,
        [&](const ColumnAssignment& c) {
            out.push_back(to_lambda_assignment(c, lambda));
            return Visit::Continue;
        },
        {}, opts);
    return out;
}

bool validate_bad_witness(const Graph& g, const BadAssignmentWitness& w)
{
    if (w.assignment.base.vertex_count() != g.n())
        return false;
    if (!validate_lambda(w.assignment).valid)
        return false;
    return !l_color(g, w.assignment.base).colorable();
}

std::optional<BlockEvidence> certify_block(const Graph& g, const std::vector<int>& vertices, int k,
                                           std::uint64_t* classes_examined)
{
    const Graph h = g.induced(vertices);
    if (h.edge_count() == 0)
        return BlockEvidence::Independent;
    if (k <= 1)
        return std::nullopt;
    if (k == 2)
        return two_choosable_fast(h) ? std::optional(BlockEvidence::ErtCore) : std::nullopt;
    if (degeneracy(h) < k)
        return BlockEvidence::Degenerate;
    if (h.n() * k <= kDefaultKAssignmentBound) {
        ChoosabilityVerdict v = k_choosable(h, k);
        if (classes_examined)
            *classes_examined = v.classes_examined;
        if (v.choosable)
            return BlockEvidence::Exhaustive;
    }
    return std::nullopt;
}

bool validate_partitionability(const Graph& g, const PartitionabilityWitness& w)
{
    if (static_cast<int>(w.blocks.size()) != w.lambda.part_count())
        return false;
    std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        const auto& b = w.blocks[i];
        if (b.k != w.lambda.part(i))
            return false;
        for (int v : b.vertices) {
            if (v < 0 || v >= g.n())
                return false;
            ++seen[static_cast<std::size_t>(v)];
        }
        const Graph h = g.induced(b.vertices);
        bool ok = false;
        switch (b.evidence) {
        case BlockEvidence::Independent:
            ok = h.edge_count() == 0;
            break;
        case BlockEvidence::ErtCore:
            ok = b.k >= 2 && two_choosable_fast(h);
            break;
        case BlockEvidence::Degenerate:
            ok = degeneracy(h) < b.k;
            break;
        case BlockEvidence::Exhaustive:
            ok = h.n() * b.k <= kDefaultKAssignmentBound && k_choosable(h, b.k).choosable;
            break;
        }
        if (!ok)
            return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

namespace {

std::vector<int> mask_vertices(VertexMask m)
{
    std::vector<int> out;
    for (; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, const IntegerPartition& lambda)
        : g_(g)
        , ks_(lambda.parts().begin(), lambda.parts().end())
        , blocks_(ks_.size(), 0)
    {
    }

    // Assigns the given units (vertex masks) to blocks.
    bool run(const std::vector<VertexMask>& units)
    {
        units_ = units;
        std::fill(blocks_.begin(), blocks_.end(), 0);
        return assign(0);
    }

    PartitionabilityWitness witness(const IntegerPartition& lambda)
    {
        PartitionabilityWitness w{lambda, {}};
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            PartitionBlock block;
            block.k = ks_[b];
            block.vertices = mask_vertices(blocks_[b]);
            auto key = std::make_pair(blocks_[b], ks_[b]);
            if (blocks_[b] == 0) {
                block.evidence = BlockEvidence::Independent;
            } else {
                block.evidence = *memo_.at(key);
                block.classes_examined = classes_.count(key) ? classes_.at(key) : 0;
            }
            w.blocks.push_back(std::move(block));
        }
        return w;
    }

private:
    bool certified(VertexMask m, int k)
    {
        auto key = std::make_pair(m, k);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second.has_value();
        std::uint64_t classes = 0;
        auto ev = certify_block(g_, mask_vertices(m), k, &classes);
        if (classes)
            classes_[key] = classes;
        memo_.emplace(key, ev);
        return ev.has_value();
    }

    bool assign(std::size_t u)
    {
        if (u == units_.size())
            return true;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            // Empty blocks with equal k are interchangeable: use the first.
            if (blocks_[b] == 0) {
                bool earlier_empty = false;
                for (std::size_t c = 0; c < b; ++c)
                    if (blocks_[c] == 0 && ks_[c] == ks_[b])
                        earlier_empty = true;
                if (earlier_empty)
                    continue;
            }
            const VertexMask before = blocks_[b];
            blocks_[b] |= units_[u];
            // Choosability is inherited by subgraphs, so a failing block
            // cannot be repaired by adding vertices.
            if (certified(blocks_[b], ks_[b]) && assign(u + 1))
                return true;
            blocks_[b] = before;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> ks_;
    std::vector<VertexMask> blocks_;
    std::vector<VertexMask> units_;
    std::map<std::pair<VertexMask, int>, std::optional<BlockEvidence>> memo_;
    std::map<std::pair<VertexMask, int>, std::uint64_t> classes_;
};

} // namespace

PartitionabilitySearch lambda_partitionable(const Graph& g, const IntegerPartition& lambda, int generic_bound)
{
    PartitionabilitySearch result;
    PartitionSearch search(g, lambda);
    if (g.part_label()) {
        std::vector<VertexMask> units;
        for (const auto& part : g.parts()) {
            VertexMask m = 0;
            for (int v : part)
                m |= VertexMask{1} << v;
            units.push_back(m);
        }
        if (search.run(units)) {
            result.witness = search.witness(lambda);
            return result;
        }
    }
    if (g.n() > generic_bound) {
        result.exhausted = false;
        return result;
    }
    std::vector<VertexMask> units;
    for (int v = 0; v < g.n(); ++v)
        units.push_back(VertexMask{1} << v);
    if (search.run(units))
        result.witness = search.witness(lambda);
    return result;
}

std::optional<ColoringWitness> color_via_partition(const Graph& g, const PartitionabilityWitness& w,
                                                   const LambdaAssignment& a)
{
    const LambdaReport report = validate_lambda(a);
    if (!report.valid || a.lambda != w.lambda)
        throw PreconditionError("coloring via a partition needs a valid assignment for the same lambda");
    const std::vector<int> order = groups_by_part(report);
    ColoringWitness out{std::vector<int>(static_cast<std::size_t>(g.n()), -1)};
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        const auto& block = w.blocks[i];
        if (block.vertices.empty())
            continue;
        const auto& group = a.grouping.groups[static_cast<std::size_t>(order[i])];
        std::vector<std::vector<int>> restricted;
        for (int v : block.vertices) {
            std::vector<int> l;
            for (int c : a.base.list(v))
                if (std::find(group.begin(), group.end(), c) != group.end())
                    l.push_back(c);
            restricted.push_back(std::move(l));
        }
        ColorResult r = l_color(g.induced(block.vertices), ListAssignment(std::move(restricted)));
        if (!r.coloring)
            return std::nullopt;
        for (std::size_t j = 0; j < block.vertices.size(); ++j)
            out.colors[static_cast<std::size_t>(block.vertices[j])] = r.coloring->colors[j];
    }
    return out;
}

std::string to_string(Decision d)
{
    switch (d) {
    case Decision::Choosable:
        return "choosable";
    case Decision::NotChoosable:
        return "not-choosable";
    case Decision::Undecided:
        return "undecided";
    }
    return "?";
}

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::Exhaustive:
        return "exhaustive";
    case Provenance::Partitionable:
        return "partitionable";
    case Provenance::Case2:
        return "case2";
    case Provenance::SeededWitness:
        return "seeded-witness";
    }
    return "?";
}

std::string to_string(BlockEvidence e)
{
    switch (e) {
    case BlockEvidence::Independent:
        return "independent";
    case BlockEvidence::ErtCore:
        return "ert-core";
    case BlockEvidence::Degenerate:
        return "degenerate";
    case BlockEvidence::Exhaustive:
        return "exhaustive";
    }
    return "?";
}

LambdaVerdict lambda_choosable(const Graph& g, const IntegerPartition& lambda, int bound,
                               const EnumerationOptions& opts)
{
    LambdaVerdict v;
    if (enumeration_size(g.n(), lambda) <= bound) {
        UncolorableSearch search = find_uncolorable(g, lambda, opts);
        v.provenance = Provenance::Exhaustive;
        v.classes_examined = search.stats.classes;
        v.nodes_searched = search.stats.nodes + search.stats.solver_nodes;
        if (search.bad) {
            LambdaAssignment a = to_lambda_assignment(*search.bad, lambda);
            ColorResult check = l_color(g, a.base);
            check_invariant(!check.colorable(), "enumeration reported a colorable assignment as bad");
            v.decision = Decision::NotChoosable;
            v.bad = BadAssignmentWitness{std::move(a), check.nodes_searched};
        } else {
            v.decision = Decision::Choosable;
        }
        return v;
    }
    PartitionabilitySearch p = lambda_partitionable(g, lambda);
    if (p.witness) {
        v.decision = Decision::Choosable;
        v.provenance = Provenance::Partitionable;
        v.partition = std::move(p.witness);
        return v;
    }
    v.decision = Decision::Undecided;
    v.note = "sum of n*k_i = " + std::to_string(enumeration_size(g.n(), lambda)) + " exceeds the exhaustive bound " +
             std::to_string(bound) + " and no partition certificate was found";
    return v;
}

} // namespace strictcol
