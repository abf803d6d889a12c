#include "strictcol/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <bit>
#include <mutex>
#include <numeric>
#include <thread>

#include "strictcol/error.hpp"

namespace strictcol {

EnumerationStats& EnumerationStats::operator+=(const EnumerationStats& o)
{
    classes += o.classes;
    nodes += o.nodes;
    pruned += o.pruned;
    solver_nodes += o.solver_nodes;
    return *this;
}

ListAssignment ColumnAssignment::lists() const
{
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (std::size_t j = 0; j < groups[gi].size(); ++j)
            for (VertexMask m = groups[gi][j]; m; m &= m - 1)
                lists[static_cast<std::size_t>(std::countr_zero(m))].push_back(color_label(gi, j));
    return ListAssignment(std::move(lists));
}

std::vector<std::vector<int>> ColumnAssignment::color_groups() const
{
    std::vector<std::vector<int>> out(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (std::size_t j = 0; j < groups[gi].size(); ++j)
            out[gi].push_back(color_label(gi, j));
    return out;
}

int enumeration_size(int n, const IntegerPartition& lambda) { return n * lambda.weight(); }

std::vector<std::vector<int>> vertex_symmetries(const Graph& g, const EnumerationOptions& opts)
{
    std::vector<int> identity(static_cast<std::size_t>(g.n()));
    std::iota(identity.begin(), identity.end(), 0);
    if (!opts.vertex_symmetry || !g.part_label())
        return {identity};

    const auto parts = g.parts();
    auto factorial = [](std::size_t x) {
        double f = 1;
        for (std::size_t i = 2; i <= x; ++i)
            f *= static_cast<double>(i);
        return f;
    };
    double order = 1;
    std::vector<std::size_t> same_size_count(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const auto& p : parts) {
        order *= factorial(p.size());
        ++same_size_count[p.size()];
    }
    for (std::size_t c : same_size_count)
        order *= factorial(c);
    if (order > static_cast<double>(opts.max_symmetry_group))
        return {identity};

    // Part permutations that preserve sizes.
    std::vector<std::vector<int>> part_maps;
    {
        std::vector<int> map(parts.size());
        std::iota(map.begin(), map.end(), 0);
        do {
            bool ok = true;
            for (std::size_t p = 0; p < parts.size() && ok; ++p)
                ok = parts[p].size() == parts[static_cast<std::size_t>(map[p])].size();
            if (ok)
                part_maps.push_back(map);
        } while (std::next_permutation(map.begin(), map.end()));
    }

    std::vector<std::vector<int>> out;
    for (const auto& pm : part_maps) {
        std::vector<int> perm(static_cast<std::size_t>(g.n()), -1);
        // Odometer over per-part vertex permutations.
        std::vector<std::vector<int>> inner(parts.size());
        for (std::size_t p = 0; p < parts.size(); ++p) {
            inner[p].resize(parts[p].size());
            std::iota(inner[p].begin(), inner[p].end(), 0);
        }
        while (true) {
            for (std::size_t p = 0; p < parts.size(); ++p) {
                const auto& target = parts[static_cast<std::size_t>(pm[p])];
                for (std::size_t j = 0; j < parts[p].size(); ++j)
                    perm[static_cast<std::size_t>(parts[p][j])] = target[static_cast<std::size_t>(inner[p][j])];
            }
            out.push_back(perm);
            std::size_t p = 0;
            for (; p < parts.size(); ++p)
                if (std::next_permutation(inner[p].begin(), inner[p].end()))
                    break;
            if (p == parts.size())
                break;
        }
    }
    // Identity first.
    auto it = std::find(out.begin(), out.end(), identity);
    if (it != out.end())
        std::iter_swap(out.begin(), it);
    return out;
}

std::vector<VertexMask> canonical_classes(const ListAssignment& lists, const std::vector<std::vector<int>>& perms)
{
    std::map<int, VertexMask> by_color;
    for (int v = 0; v < lists.vertex_count(); ++v)
        for (int c : lists.list(v))
            by_color[c] |= VertexMask{1} << v;
    std::vector<VertexMask> best;
    for (const auto& perm : perms) {
        std::vector<VertexMask> img;
        for (auto [c, m] : by_color) {
            VertexMask out = 0;
            for (; m; m &= m - 1)
                out |= VertexMask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
            img.push_back(out);
        }
        std::sort(img.begin(), img.end(), std::greater<>());
        if (img > best)
            best = std::move(img);
    }
    return best;
}

std::vector<VertexMask> canonical_classes(const Graph& g, const ListAssignment& lists, const EnumerationOptions& opts)
{
    if (lists.vertex_count() != g.n())
        throw PreconditionError("list assignment does not match the graph");
    return canonical_classes(lists, vertex_symmetries(g, opts));
}

namespace {

using InternalVisitor = std::function<Visit(const ColumnAssignment&, std::span<const std::uint64_t>)>;

class Engine {
public:
    Engine(const Graph& g, const IntegerPartition& lambda, const EnumerationOptions& opts)
        : g_(g)
        , n_(g.n())
        , perms_(vertex_symmetries(g, opts))
    {
        if (enumeration_size(n_, lambda) > 64)
            throw BoundError("more than 64 color classes cannot be tracked");
        const auto t = static_cast<std::size_t>(lambda.part_count());
        cur_.n = n_;
        cur_.group_k.assign(lambda.parts().begin(), lambda.parts().end());
        cur_.window_base.resize(t);
        cur_.groups.assign(t, {});
        int base = 0;
        for (std::size_t i = 0; i < t; ++i) {
            cur_.window_base[i] = base;
            base += n_ * cur_.group_k[i];
        }
        // Canonical order is ascending, so the reverse puts the largest k first.
        for (std::size_t i = t; i-- > 0;)
            order_.push_back(i);
        stats_.symmetry_group_size = perms_.size();
        lists_.assign(static_cast<std::size_t>(n_), 0);
        deficit_.assign(static_cast<std::size_t>(n_), 0);
        scratch_.resize(t);
    }

    void set_visitor(InternalVisitor v) { visit_ = std::move(v); }
    void set_prune(PrunePredicate p) { prune_ = std::move(p); }

    // Choices for the very first color class.
    std::vector<VertexMask> first_choices()
    {
        std::vector<VertexMask> out;
        if (n_ == 0)
            return out;
        start_group(0);
        VertexMask avail = available();
        int top = 63 - std::countl_zero(avail);
        VertexMask top_bit = VertexMask{1} << top;
        VertexMask rest = avail & ~top_bit;
        for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
            out.push_back(top_bit | sub);
            if (sub == 0)
                break;
        }
        return out;
    }

    // Runs the subtree below one first class. An empty graph has a single
    // (empty) assignment, reached by run_empty().
    void run_branch(VertexMask first)
    {
        stop_ = false;
        start_group(0);
        place(0, first, 0, false);
    }

    void run_empty()
    {
        stop_ = false;
        leaf();
    }

    bool stopped() const { return stop_; }
    const EnumerationStats& stats() const { return stats_; }
    void reset_stats() { stats_ = EnumerationStats{.symmetry_group_size = perms_.size()}; }

private:
    void start_group(std::size_t ep)
    {
        const int k = cur_.group_k[order_[ep]];
        std::fill(deficit_.begin(), deficit_.end(), k);
    }

    VertexMask available() const
    {
        VertexMask m = 0;
        for (int v = 0; v < n_; ++v)
            if (deficit_[static_cast<std::size_t>(v)] > 0)
                m |= VertexMask{1} << v;
        return m;
    }

    // Try class `m` at column `col` of enumeration-order group `ep`.
    void place(std::size_t ep, VertexMask m, std::size_t col, bool tight)
    {
        auto& group = cur_.groups[order_[ep]];
        group.push_back(m);
        const std::uint64_t bit = std::uint64_t{1} << placed_;
        ++placed_;
        for (VertexMask x = m; x; x &= x - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(x));
            --deficit_[v];
            if (lists_[v] == 0)
                ++covered_;
            lists_[v] |= bit;
        }
        ++stats_.nodes;

        const bool group_done = available() == 0;
        const bool final_leaf = group_done && ep + 1 == order_.size();
        if (!final_leaf && prune_ && covered_ == n_ && prune_(lists_)) {
            ++stats_.pruned;
        } else if (group_done) {
            finish_group(ep);
        } else {
            extend(ep, m, col + 1, tight);
        }

        for (VertexMask x = m; x; x &= x - 1) {
            auto v = static_cast<std::size_t>(std::countr_zero(x));
            ++deficit_[v];
            lists_[v] &= ~bit;
            if (lists_[v] == 0)
                --covered_;
        }
        --placed_;
        group.pop_back();
    }

    void extend(std::size_t ep, VertexMask last, std::size_t col, bool tight)
    {
        const VertexMask avail = available();
        const int top = 63 - std::countl_zero(avail);
        const VertexMask top_bit = VertexMask{1} << top;
        const VertexMask rest = avail & ~top_bit;
        const std::vector<VertexMask>* prev = tight ? &cur_.groups[order_[ep - 1]] : nullptr;
        for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
            const VertexMask m = top_bit | sub;
            if (m <= last) {
                bool ok = true;
                bool next_tight = false;
                if (prev) {
                    // This group must not exceed the previous equal-k group.
                    if (col >= prev->size() || m > (*prev)[col])
                        ok = false;
                    else
                        next_tight = m == (*prev)[col];
                }
                if (ok) {
                    place(ep, m, col, next_tight);
                    if (stop_)
                        return;
                }
            }
            if (sub == 0)
                break;
        }
    }

    void finish_group(std::size_t ep)
    {
        if (ep == 0 && perms_.size() > 1 && !first_group_canonical())
            return;
        if (ep + 1 == order_.size()) {
            leaf();
            return;
        }
        std::vector<int> saved = deficit_;
        start_group(ep + 1);
        const bool tight = cur_.group_k[order_[ep + 1]] == cur_.group_k[order_[ep]];
        const VertexMask avail = available();
        const int top = 63 - std::countl_zero(avail);
        const VertexMask top_bit = VertexMask{1} << top;
        const VertexMask rest = avail & ~top_bit;
        const auto& prev = cur_.groups[order_[ep]];
        for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
            const VertexMask m = top_bit | sub;
            bool ok = true;
            bool next_tight = false;
            if (tight) {
                if (m > prev[0])
                    ok = false;
                else
                    next_tight = m == prev[0];
            }
            if (ok) {
                place(ep + 1, m, 0, next_tight);
                if (stop_)
                    break;
            }
            if (sub == 0)
                break;
        }
        deficit_ = std::move(saved);
    }

    VertexMask apply(const std::vector<int>& perm, VertexMask m) const
    {
        VertexMask out = 0;
        for (; m; m &= m - 1)
            out |= VertexMask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
        return out;
    }

    void image_into(const std::vector<int>& perm, const std::vector<VertexMask>& cols,
                    std::vector<VertexMask>& out) const
    {
        out.clear();
        for (VertexMask m : cols)
            out.push_back(apply(perm, m));
        std::sort(out.begin(), out.end(), std::greater<>());
    }

    // Rejects the first group if some symmetry maps it higher, and records
    // the symmetries that fix it: only those can tie at a leaf.
    bool first_group_canonical()
    {
        const auto& first = cur_.groups[order_[0]];
        stabilizer_.clear();
        for (std::size_t p = 1; p < perms_.size(); ++p) {
            image_into(perms_[p], first, scratch_[0]);
            if (scratch_[0] > first)
                return false;
            if (scratch_[0] == first)
                stabilizer_.push_back(p);
        }
        return true;
    }

    bool leaf_canonical()
    {
        if (perms_.size() <= 1)
            return true;
        // With a single group of the largest k, a symmetry that moves the
        // first group lower already loses; otherwise check every symmetry.
        const bool single_first = order_.size() == 1 || cur_.group_k[order_[1]] != cur_.group_k[order_[0]];
        auto check = [&](std::size_t p) {
            std::size_t start = 0;
            while (start < order_.size()) {
                std::size_t end = start + 1;
                while (end < order_.size() && cur_.group_k[order_[end]] == cur_.group_k[order_[start]])
                    ++end;
                for (std::size_t ep = start; ep < end; ++ep)
                    image_into(perms_[p], cur_.groups[order_[ep]], scratch_[ep]);
                // Equal-k groups may be permuted: order each run descending.
                std::sort(scratch_.begin() + static_cast<std::ptrdiff_t>(start),
                          scratch_.begin() + static_cast<std::ptrdiff_t>(end), std::greater<>());
                for (std::size_t ep = start; ep < end; ++ep) {
                    const auto& mine = cur_.groups[order_[ep]];
                    if (scratch_[ep] > mine)
                        return false;
                    if (scratch_[ep] < mine)
                        return true;
                }
                start = end;
            }
            return true;
        };
        if (single_first) {
            for (std::size_t p : stabilizer_)
                if (!check(p))
                    return false;
            return true;
        }
        for (std::size_t p = 1; p < perms_.size(); ++p)
            if (!check(p))
                return false;
        return true;
    }

    void leaf()
    {
        if (!leaf_canonical())
            return;
        ++stats_.classes;
        if (visit_ && visit_(cur_, lists_) == Visit::Stop)
            stop_ = true;
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> perms_;
    std::vector<std::size_t> stabilizer_;
    std::vector<std::vector<VertexMask>> scratch_;
    std::vector<std::size_t> order_;
    ColumnAssignment cur_;
    std::vector<std::uint64_t> lists_;
    std::vector<int> deficit_;
    int placed_ = 0;
    int covered_ = 0;
    bool stop_ = false;
    InternalVisitor visit_;
    PrunePredicate prune_;
    EnumerationStats stats_;
};

} // namespace

EnumerationStats enumerate_assignments(const Graph& g, const IntegerPartition& lambda, const LeafVisitor& visit,
                                       const PrunePredicate& prune, const EnumerationOptions& opts)
{
    Engine engine(g, lambda, opts);
    engine.set_visitor([&](const ColumnAssignment& a, std::span<const std::uint64_t>) { return visit(a); });
    engine.set_prune(prune);
    if (g.n() == 0) {
        engine.run_empty();
        return engine.stats();
    }
    for (VertexMask first : engine.first_choices()) {
        engine.run_branch(first);
        if (engine.stopped())
            break;
    }
    return engine.stats();
}

UncolorableSearch find_uncolorable(const Graph& g, const IntegerPartition& lambda, const EnumerationOptions& opts)
{
    struct Branch {
        std::optional<ColumnAssignment> bad;
        EnumerationStats stats;
        bool done = false;
    };

    auto make_engine = [&](EnumerationStats* solver_nodes_sink) {
        auto engine = std::make_unique<Engine>(g, lambda, opts);
        engine->set_prune([&g, solver_nodes_sink](std::span<const std::uint64_t> lists) {
            return mask_colorable(g, lists, solver_nodes_sink->solver_nodes);
        });
        return engine;
    };

    UncolorableSearch result;
    if (g.n() == 0) {
        // The empty graph is trivially colorable.
        result.stats.classes = 1;
        return result;
    }

    EnumerationStats probe_sink;
    auto probe = make_engine(&probe_sink);
    const std::vector<VertexMask> firsts = probe->first_choices();
    std::vector<Branch> branches(firsts.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> earliest_bad{firsts.size()};

    auto worker = [&]() {
        EnumerationStats sink;
        auto engine = make_engine(&sink);
        Branch* current = nullptr;
        engine->set_visitor([&](const ColumnAssignment& a, std::span<const std::uint64_t> lists) {
            if (mask_colorable(g, lists, sink.solver_nodes))
                return Visit::Continue;
            current->bad = a;
            return Visit::Stop;
        });
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= firsts.size() || i > earliest_bad.load())
                break;
            current = &branches[i];
            engine->reset_stats();
            sink = EnumerationStats{};
            engine->run_branch(firsts[i]);
            current->stats = engine->stats();
            current->stats.solver_nodes = sink.solver_nodes;
            current->done = true;
            if (current->bad) {
                std::size_t seen = earliest_bad.load();
                while (i < seen && !earliest_bad.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };

    const int workers = std::max(1, opts.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    result.stats.symmetry_group_size = probe->stats().symmetry_group_size;
    for (auto& b : branches) {
        check_invariant(b.done, "enumeration branch skipped before the first uncolorable class");
        result.stats += b.stats;
        if (b.bad) {
            result.bad = std::move(b.bad);
            break;
        }
    }
    return result;
}

} // namespace strictcol
