#include "doctest.h"

#include "oracles.hpp"
#include "strictcol/enumerate.hpp"
#include "strictcol/error.hpp"
#include "strictcol/lambda.hpp"

using namespace strictcol;

namespace {

std::size_t count_classes(const Graph& g, const IntegerPartition& lambda, EnumerationOptions opts = {})
{
    std::size_t count = 0;
    enumerate_assignments(g, lambda, [&](const ColumnAssignment&) {
        ++count;
        return Visit::Continue;
    }, {}, opts);
    return count;
}

std::vector<std::vector<int>> part_preserving(const Graph& g)
{
    std::vector<std::vector<int>> out;
    for (auto& p : oracle::automorphisms(g))
        out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("class counts match brute-force orbit counts")
{
    const std::vector<std::vector<int>> id1{oracle::identity(1)};
    CHECK(count_classes(Graph(1), IntegerPartition({1})) == 1);
    CHECK(count_classes(Graph(1), IntegerPartition({2})) == oracle::count_k_assignment_classes(Graph(1), 2, id1));
    CHECK(count_classes(complete_graph(2), IntegerPartition({1})) == 2);

    for (int n = 1; n <= 4; ++n) {
        const Graph g = empty_graph(n);
        const auto id = std::vector<std::vector<int>>{oracle::identity(n)};
        for (int k = 1; n * k <= 8; ++k)
            CHECK_MESSAGE(count_classes(g, IntegerPartition({k})) == oracle::count_k_assignment_classes(g, k, id),
                          "n=" << n << " k=" << k);
    }

    // With symmetry: complete multipartite graphs, where part-preserving
    // permutations are exactly the automorphisms.
    for (auto sizes : {std::vector<int>{1, 2}, {1, 1}, {3}, {1, 1, 1}, {2, 2}}) {
        const Graph g = complete_multipartite(PartSizes(sizes));
        for (int k = 1; g.n() * k <= 8; ++k)
            CHECK_MESSAGE(count_classes(g, IntegerPartition({k})) ==
                              oracle::count_k_assignment_classes(g, k, part_preserving(g)),
                          PartSizes(sizes).to_string() << " k=" << k);
    }
}

TEST_CASE("set partitions and products of groups")
{
    for (int n = 1; n <= 7; ++n) {
        const Graph g = empty_graph(n);
        const auto b = oracle::bell(n);
        CHECK(count_classes(g, IntegerPartition({1})) == b);
        if (n <= 5) {
            CHECK(count_classes(g, IntegerPartition({1, 1})) == b * (b + 1) / 2);
            CHECK(count_classes(g, IntegerPartition({1, 2})) == b * count_classes(g, IntegerPartition({2})));
        }
    }
    CHECK(count_classes(empty_graph(6), IntegerPartition({2})) == 29388);
}

TEST_CASE("symmetry reduction only merges equivalent classes")
{
    const Graph g = complete_multipartite(PartSizes({1, 2, 2}));
    EnumerationOptions off;
    off.vertex_symmetry = false;
    std::set<std::vector<VertexMask>> with, without;
    const auto perms = vertex_symmetries(g, {});
    CHECK(perms.size() == 8);
    CHECK(perms.front() == oracle::identity(5));
    enumerate_assignments(g, IntegerPartition({2}), [&](const ColumnAssignment& a) {
        CHECK(with.insert(canonical_classes(a.lists(), perms)).second);
        return Visit::Continue;
    });
    enumerate_assignments(g, IntegerPartition({2}), [&](const ColumnAssignment& a) {
        without.insert(canonical_classes(a.lists(), perms));
        return Visit::Continue;
    }, {}, off);
    CHECK(with == without);
}

TEST_CASE("enumerated assignments are well formed")
{
    const Graph g = complete_multipartite(PartSizes({1, 2}));
    const IntegerPartition lambda({1, 2});
    auto stats = enumerate_assignments(g, lambda, [&](const ColumnAssignment& a) {
        const auto la = to_lambda_assignment(a, lambda);
        CHECK(validate_lambda(la).valid);
        for (int v = 0; v < g.n(); ++v)
            for (int c : la.base.list(v)) {
                CHECK(c >= 1);
                CHECK(c <= g.n() * lambda.weight());
            }
        return Visit::Continue;
    });
    CHECK(stats.classes > 0);
}

TEST_CASE("stopping and bounds")
{
    std::size_t seen = 0;
    enumerate_assignments(empty_graph(4), IntegerPartition({2}), [&](const ColumnAssignment&) {
        return ++seen == 3 ? Visit::Stop : Visit::Continue;
    });
    CHECK(seen == 3);
    CHECK(count_classes(Graph(0), IntegerPartition({2})) == 1);
    CHECK_THROWS_AS(count_classes(complete_graph(9), IntegerPartition({8})), BoundError);
}

TEST_CASE("search results do not depend on the worker count")
{
    for (auto sizes : {std::vector<int>{2, 4}, {2, 3}, {1, 2, 2}}) {
        const Graph g = complete_multipartite(PartSizes(sizes));
        const IntegerPartition lambda = sizes.size() == 2 ? IntegerPartition({2}) : IntegerPartition({1, 2});
        EnumerationOptions one, three;
        three.workers = 3;
        auto a = find_uncolorable(g, lambda, one);
        auto b = find_uncolorable(g, lambda, three);
        CHECK(a.bad.has_value() == b.bad.has_value());
        if (a.bad && b.bad)
            CHECK(a.bad->groups == b.bad->groups);
        CHECK(a.stats.classes == b.stats.classes);
        CHECK(a.stats.nodes == b.stats.nodes);
    }
}
