#include "strictcol/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "strictcol/error.hpp"

namespace strictcol {

namespace {

std::string_view trim(std::string_view s)
{
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view digits, std::string_view term)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("malformed partition term '" + std::string(term) + "'");
    if (value < 1)
        throw ParseError("partition term '" + std::string(term) + "' must be positive");
    return value;
}

// Assigns parts (in order) to groups. A group is either exact (its sum must
// equal `target`) or open (its sum must reach at least `target`).
class GroupingSearch {
public:
    GroupingSearch(std::span<const int> parts, std::vector<int> target, std::vector<bool> exact)
        : parts_(parts.begin(), parts.end())
        , target_(std::move(target))
        , exact_(std::move(exact))
    {
        suffix_.assign(parts_.size() + 1, 0);
        for (std::size_t i = parts_.size(); i-- > 0;)
            suffix_[i] = suffix_[i + 1] + parts_[i];
    }

    std::optional<std::vector<int>> solve()
    {
        failed_.clear();
        std::vector<int> remaining = target_;
        std::vector<int> assignment(parts_.size(), -1);
        if (!dfs(0, remaining, assignment))
            return std::nullopt;
        return assignment;
    }

private:
    // For exact groups `remaining` is the capacity left; for open groups it
    // is the deficit still to cover (clamped at zero).
    bool dfs(std::size_t i, std::vector<int>& remaining, std::vector<int>& assignment)
    {
        int need = 0;
        for (std::size_t g = 0; g < remaining.size(); ++g)
            need += remaining[g];
        bool has_open = std::find(exact_.begin(), exact_.end(), false) != exact_.end();
        if (i == parts_.size())
            return need == 0;
        if (suffix_[i] < need || (!has_open && suffix_[i] != need))
            return false;

        std::vector<int> key = remaining;
        key.push_back(static_cast<int>(i));
        if (failed_.count(key))
            return false;

        int p = parts_[i];
        for (std::size_t g = 0; g < remaining.size(); ++g) {
            if (exact_[g] && remaining[g] < p)
                continue;
            bool duplicate = false;
            for (std::size_t h = 0; h < g; ++h)
                if (exact_[h] == exact_[g] && remaining[h] == remaining[g]) {
                    duplicate = true;
                    break;
                }
            if (duplicate)
                continue;
            int before = remaining[g];
            remaining[g] = exact_[g] ? before - p : std::max(0, before - p);
            assignment[i] = static_cast<int>(g);
            if (dfs(i + 1, remaining, assignment))
                return true;
            remaining[g] = before;
        }
        assignment[i] = -1;
        failed_.insert(std::move(key));
        return false;
    }

    std::vector<int> parts_;
    std::vector<int> target_;
    std::vector<bool> exact_;
    std::vector<int> suffix_;
    std::set<std::vector<int>> failed_;
};

void generate(int min_part, int remaining, std::vector<int>& prefix, std::vector<IntegerPartition>& out)
{
    for (int p = min_part; p <= remaining; ++p) {
        if (p == remaining) {
            prefix.push_back(p);
            out.emplace_back(prefix);
            prefix.pop_back();
        } else if (remaining - p >= p) {
            prefix.push_back(p);
            generate(p, remaining - p, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

IntegerPartition::IntegerPartition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    if (parts_.empty())
        throw PreconditionError("integer partition must have at least one part");
    for (int p : parts_)
        if (p < 1)
            throw PreconditionError("integer partition parts must be positive");
    std::sort(parts_.begin(), parts_.end());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntegerPartition IntegerPartition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (trim(text).empty())
        throw ParseError("empty partition text");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view term = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                          : comma - start));
        if (term.empty())
            throw ParseError("empty term in partition text '" + std::string(text) + "'");
        std::size_t star = term.find('*');
        if (star == std::string_view::npos) {
            parts.push_back(parse_positive(term, term));
        } else {
            int value = parse_positive(trim(term.substr(0, star)), term);
            int mult = parse_positive(trim(term.substr(star + 1)), term);
            parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return IntegerPartition(std::move(parts));
}

std::string IntegerPartition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string IntegerPartition::braced() const { return "{" + to_string() + "}"; }

IntegerPartition IntegerPartition::near_coloring(int k)
{
    if (k < 2)
        throw PreconditionError("{1*(k-2),2} needs k >= 2");
    std::vector<int> parts(static_cast<std::size_t>(k - 2), 1);
    parts.push_back(2);
    return IntegerPartition(std::move(parts));
}

IntegerPartition IntegerPartition::all_ones(int k)
{
    if (k < 1)
        throw PreconditionError("{1*k} needs k >= 1");
    return IntegerPartition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

IntegerPartition parse_partition(std::string_view text) { return IntegerPartition::parse(text); }

std::string format_partition(const IntegerPartition& p) { return p.to_string(); }

bool check_grouping(const IntegerPartition& fine, std::span<const int> targets, const GroupingWitness& w,
                    bool exact)
{
    if (w.assignment.size() != static_cast<std::size_t>(fine.part_count()))
        return false;
    std::vector<int> sums(targets.size(), 0);
    std::vector<int> sizes(targets.size(), 0);
    for (std::size_t j = 0; j < w.assignment.size(); ++j) {
        int g = w.assignment[j];
        if (g < 0 || static_cast<std::size_t>(g) >= targets.size())
            return false;
        sums[g] += fine.part(j);
        ++sizes[g];
    }
    for (std::size_t g = 0; g < targets.size(); ++g) {
        if (sizes[g] == 0)
            return false;
        if (exact ? sums[g] != targets[g] : sums[g] < targets[g])
            return false;
    }
    if (w.intermediate) {
        if (IntegerPartition(sums) != *w.intermediate)
            return false;
    }
    return true;
}

std::vector<IntegerPartition> enumerate_partitions(int k, int bound)
{
    if (k < 1 || k > bound)
        throw BoundError("partition weight " + std::to_string(k) + " outside 1.." + std::to_string(bound));
    std::vector<IntegerPartition> out;
    std::vector<int> prefix;
    generate(1, k, prefix, out);
    return out;
}

std::optional<GroupingWitness> is_refinement(const IntegerPartition& fine, const IntegerPartition& coarse)
{
    if (fine.weight() != coarse.weight() || fine.part_count() < coarse.part_count())
        return std::nullopt;
    std::vector<int> target(coarse.parts().begin(), coarse.parts().end());
    GroupingSearch search(fine.parts(), target, std::vector<bool>(target.size(), true));
    auto assignment = search.solve();
    if (!assignment)
        return std::nullopt;
    return GroupingWitness{std::move(*assignment), std::nullopt};
}

std::optional<GroupingWitness> leq(const IntegerPartition& lo, const IntegerPartition& hi)
{
    if (lo.weight() > hi.weight() || lo.part_count() > hi.part_count())
        return std::nullopt;
    const std::size_t t = static_cast<std::size_t>(lo.part_count());
    std::vector<int> target(lo.parts().begin(), lo.parts().end());
    std::vector<bool> exact(t, false);

    if (!GroupingSearch(hi.parts(), target, exact).solve())
        return std::nullopt;

    // Fix group sums one at a time to the least feasible value.
    for (std::size_t g = 0; g < t; ++g) {
        int others = 0;
        for (std::size_t h = 0; h < t; ++h)
            if (h != g)
                others += target[h];
        int fixed = -1;
        for (int v = lo.part(g); v <= hi.weight() - others; ++v) {
            std::vector<int> trial = target;
            std::vector<bool> trial_exact = exact;
            trial[g] = v;
            trial_exact[g] = true;
            if (GroupingSearch(hi.parts(), trial, trial_exact).solve()) {
                fixed = v;
                break;
            }
        }
        check_invariant(fixed >= 0, "leq: feasible grouping lost while fixing sums");
        target[g] = fixed;
        exact[g] = true;
    }

    auto assignment = GroupingSearch(hi.parts(), target, exact).solve();
    check_invariant(assignment.has_value(), "leq: fixed sums have no grouping");
    return GroupingWitness{std::move(*assignment), IntegerPartition(target)};
}

std::string HasseDiagram::to_dot() const
{
    std::ostringstream out;
    out << "digraph refinement {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << nodes[i].braced() << "\"];\n";
    for (auto [from, to] : edges)
        out << "  n" << from << " -> n" << to << ";\n";
    out << "}\n";
    return out.str();
}

HasseDiagram refinement_hasse(int k, int bound)
{
    if (k < 1 || k > bound)
        throw BoundError("Hasse diagram weight " + std::to_string(k) + " outside 1.." + std::to_string(bound));
    HasseDiagram d;
    d.nodes = enumerate_partitions(k, bound);
    const std::size_t m = d.nodes.size();
    // refines[c][f]: node f is a proper refinement of node c
    std::vector<std::vector<bool>> refines(m, std::vector<bool>(m, false));
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t f = 0; f < m; ++f)
            if (c != f && is_refinement(d.nodes[f], d.nodes[c]))
                refines[c][f] = true;
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t f = 0; f < m; ++f) {
            if (!refines[c][f])
                continue;
            bool covered = true;
            for (std::size_t mid = 0; mid < m && covered; ++mid)
                if (refines[c][mid] && refines[mid][f])
                    covered = false;
            if (covered)
                d.edges.emplace_back(static_cast<int>(c), static_cast<int>(f));
        }
    return d;
}

} // namespace strictcol
