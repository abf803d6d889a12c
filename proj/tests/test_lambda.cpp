#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "strictcol/error.hpp"
#include "strictcol/lambda.hpp"
#include "strictcol/strict.hpp"

using namespace strictcol;

namespace {

bool has_kind(const LambdaReport& r, LambdaViolation::Kind k)
{
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const auto& v) { return v.kind == k; });
}

// A random lambda-assignment: group i owns colors base_i..base_i+width-1 and
// each vertex draws k_i distinct colors from it.
LambdaAssignment random_assignment(std::mt19937& rng, int n, const IntegerPartition& lambda, int width)
{
    std::vector<std::vector<int>> groups;
    int base = 0;
    for (int k : lambda.parts()) {
        std::vector<int> g;
        for (int c = 0; c < std::max(width, k); ++c)
            g.push_back(base + c);
        base += static_cast<int>(g.size());
        groups.push_back(g);
    }
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (auto& l : lists)
        for (std::size_t i = 0; i < groups.size(); ++i) {
            auto pool = groups[i];
            std::shuffle(pool.begin(), pool.end(), rng);
            l.insert(l.end(), pool.begin(), pool.begin() + lambda.part(i));
        }
    // Present the groups in a shuffled order.
    std::shuffle(groups.begin(), groups.end(), rng);
    return LambdaAssignment{ListAssignment(lists), ColorGrouping{groups}, lambda};
}

} // namespace

TEST_CASE("validate lambda-assignments")
{
    const auto w = witness_k3k(3);
    auto r = validate_lambda(w);
    CHECK(r.valid);
    CHECK(r.violations.empty());
    CHECK(r.group_targets == std::vector<int>{2, 1});
    CHECK(groups_by_part(r) == std::vector<int>{1, 0});

    auto bad = w;
    bad.grouping.groups = {{0, 1}, {2, 3}};
    auto rb = validate_lambda(bad);
    CHECK_FALSE(rb.valid);
    CHECK(has_kind(rb, LambdaViolation::Kind::Intersection));
    // Most lists meet {0,1} once; vertex 0 with {0,1,3} is the outlier.
    CHECK(std::any_of(rb.violations.begin(), rb.violations.end(), [](const auto& v) {
        return v.kind == LambdaViolation::Kind::Intersection && v.vertex == 0 && v.actual == 2;
    }));

    CHECK(validate_lambda(LambdaAssignment{ListAssignment(std::vector<std::vector<int>>{{1}}), ColorGrouping{{{1}}}, IntegerPartition({1})}).valid);

    auto count = w;
    count.grouping.groups = {{0, 1, 2, 3}};
    CHECK(has_kind(validate_lambda(count), LambdaViolation::Kind::GroupCount));
    auto overlap = w;
    overlap.grouping.groups = {{0, 1, 2}, {2, 3}};
    CHECK(has_kind(validate_lambda(overlap), LambdaViolation::Kind::Overlap));
    auto empty = w;
    empty.grouping.groups = {{0, 1, 2, 3}, {}};
    CHECK(has_kind(validate_lambda(empty), LambdaViolation::Kind::EmptyGroup));
    auto uncovered = w;
    uncovered.grouping.groups = {{0, 1, 2}, {4}};
    CHECK(has_kind(validate_lambda(uncovered), LambdaViolation::Kind::Uncovered));
    auto size = w;
    size.lambda = IntegerPartition({1, 3});
    CHECK(has_kind(validate_lambda(size), LambdaViolation::Kind::ListSize));
    auto multiset = LambdaAssignment{ListAssignment({{1, 2}, {1, 3}}), ColorGrouping{{{1}, {2, 3}}}, IntegerPartition({2})};
    CHECK(has_kind(validate_lambda(multiset), LambdaViolation::Kind::GroupCount));
    auto wrong_counts = LambdaAssignment{ListAssignment({{1, 2, 3}, {1, 2, 4}}), ColorGrouping{{{1, 2}, {3, 4}}},
                                         IntegerPartition({1, 2})};
    CHECK(validate_lambda(wrong_counts).valid);
    wrong_counts.lambda = IntegerPartition({1, 1, 1});
    CHECK_FALSE(validate_lambda(wrong_counts).valid);
}

TEST_CASE("coarsening")
{
    const auto w = witness_k3k(3);
    auto to3 = is_refinement(w.lambda, IntegerPartition({3}));
    REQUIRE(to3);
    auto merged = coarsen_grouping(w, IntegerPartition({3}), *to3);
    CHECK(validate_lambda(merged).valid);
    CHECK(merged.grouping.groups == std::vector<std::vector<int>>{{0, 1, 2, 3}});

    auto same = is_refinement(w.lambda, w.lambda);
    REQUIRE(same);
    auto id = coarsen_grouping(w, w.lambda, *same);
    CHECK(id.base == w.base);
    CHECK(validate_lambda(id).valid);

    const auto a = LambdaAssignment{ListAssignment({{1, 3, 5, 6}, {2, 4, 5, 7}, {1, 4, 6, 7}}),
                                    ColorGrouping{{{1, 2}, {3, 4}, {5, 6, 7}}}, IntegerPartition({1, 1, 2})};
    REQUIRE(validate_lambda(a).valid);
    auto to22 = is_refinement(a.lambda, IntegerPartition({2, 2}));
    REQUIRE(to22);
    CHECK(validate_lambda(coarsen_grouping(a, IntegerPartition({2, 2}), *to22)).valid);

    CHECK_THROWS_AS(coarsen_grouping(a, IntegerPartition({4}), GroupingWitness{{0, 1, 0}, {}}), PreconditionError);

    std::mt19937 rng(99);
    int trials = 0;
    while (trials < 500) {
        const int k = 2 + static_cast<int>(rng() % 6);
        const auto all = enumerate_partitions(k);
        const auto& fine = all[rng() % all.size()];
        const auto& coarse = all[rng() % all.size()];
        auto wit = is_refinement(fine, coarse);
        if (!wit)
            continue;
        ++trials;
        auto lifted = random_assignment(rng, 1 + static_cast<int>(rng() % 5), fine, 1 + static_cast<int>(rng() % 4));
        REQUIRE(validate_lambda(lifted).valid);
        CHECK(validate_lambda(coarsen_grouping(lifted, coarse, *wit)).valid);
    }
}

TEST_CASE("lambda-assignment enumeration")
{
    CHECK(enumerate_lambda_assignments(Graph(1), IntegerPartition({1, 1})).size() == 1);
    CHECK(enumerate_lambda_assignments(complete_graph(2), IntegerPartition({1})).size() == 2);

    const Graph k222 = complete_multipartite(PartSizes({2, 2, 2}));
    const auto all = enumerate_lambda_assignments(k222, IntegerPartition({1, 2}));
    CHECK_FALSE(all.empty());
    for (const auto& a : all) {
        CHECK(validate_lambda(a).valid);
        CHECK(l_color(k222, a.base).colorable());
    }
    CHECK_THROWS_AS(enumerate_lambda_assignments(complete_graph(8), IntegerPartition({1, 1, 2})), BoundError);
}

TEST_CASE("lambda-choosability")
{
    const Graph k333 = complete_multipartite(PartSizes({3, 3, 3}));
    // Out of the exhaustive bound here; the decision falls back to certificates.
    auto v = lambda_choosable(k333, IntegerPartition({1, 2}), 20);
    CHECK(v.decision == Decision::Undecided);
    CHECK_FALSE(v.note.empty());
    CHECK(validate_bad_witness(k333, BadAssignmentWitness{witness_k3k(3), 0}));

    auto k22 = lambda_choosable(complete_multipartite(PartSizes({2, 2})), IntegerPartition({1, 1}));
    CHECK(k22.decision == Decision::Choosable);
    CHECK(k22.provenance == Provenance::Exhaustive);

    auto k222 = lambda_choosable(complete_multipartite(PartSizes({2, 2, 2})), IntegerPartition({1, 2}));
    CHECK(k222.decision == Decision::Choosable);
    CHECK(k222.classes_examined > 0);

    auto k3 = lambda_choosable(complete_graph(3), IntegerPartition({1, 2}));
    CHECK(k3.decision == Decision::Choosable);

    auto k24 = lambda_choosable(complete_multipartite(PartSizes({2, 4})), IntegerPartition({2}));
    REQUIRE(k24.decision == Decision::NotChoosable);
    REQUIRE(k24.bad);
    CHECK(validate_bad_witness(complete_multipartite(PartSizes({2, 4})), *k24.bad));

    // Beyond the bound, a partition certificate still decides.
    auto big = lambda_choosable(complete_multipartite(PartSizes({2, 3, 9, 9})), IntegerPartition({1, 1, 2}));
    CHECK(big.decision == Decision::Choosable);
    CHECK(big.provenance == Provenance::Partitionable);
    REQUIRE(big.partition);
    CHECK(validate_partitionability(complete_multipartite(PartSizes({2, 3, 9, 9})), *big.partition));

    CHECK(to_string(Decision::NotChoosable) == "not-choosable");
    CHECK(to_string(Provenance::SeededWitness) == "seeded-witness");
    CHECK(to_string(BlockEvidence::ErtCore) == "ert-core");
}

TEST_CASE("{1*k}-choosability is k-colorability")
{
    for (int n = 1; n <= 4; ++n)
        for (std::uint32_t code = 0; code < (1U << oracle::pair_count(n)); ++code) {
            const Graph g = oracle::graph_from_code(n, code);
            const int chi = oracle::chromatic(g);
            for (int k = 1; k <= 3; ++k) {
                auto v = lambda_choosable(g, IntegerPartition::all_ones(k));
                REQUIRE(v.decision != Decision::Undecided);
                CHECK((v.decision == Decision::Choosable) == (chi <= k));
            }
        }
}

TEST_CASE("partitionability")
{
    const Graph k233 = complete_multipartite(PartSizes({2, 3, 3}));
    auto p = lambda_partitionable(k233, IntegerPartition({1, 2}));
    REQUIRE(p.witness);
    CHECK(validate_partitionability(k233, *p.witness));
    REQUIRE(p.witness->blocks.size() == 2);
    CHECK(p.witness->blocks[0].k == 1);
    // V_2 alone, then K_{2,3} on V_1 and V_3.
    CHECK(p.witness->blocks[0].vertices == std::vector<int>{2, 3, 4});
    CHECK(p.witness->blocks[1].vertices == std::vector<int>{0, 1, 5, 6, 7});
    CHECK(p.witness->blocks[1].evidence == BlockEvidence::ErtCore);

    const Graph k4 = complete_graph(4);
    auto pk = lambda_partitionable(k4, IntegerPartition({1, 1, 2}));
    REQUIRE(pk.witness);
    CHECK(validate_partitionability(k4, *pk.witness));
    CHECK(pk.witness->blocks[2].vertices.size() == 2);

    auto e3 = lambda_partitionable(empty_graph(3), IntegerPartition({1}));
    REQUIRE(e3.witness);
    CHECK(e3.witness->blocks[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(e3.witness->blocks[0].evidence == BlockEvidence::Independent);

    // Strictly 3-colorable graphs have no lambda_3-partition.
    CHECK_FALSE(lambda_partitionable(complete_multipartite(PartSizes({3, 3, 3})), IntegerPartition({1, 2})).witness);
    CHECK_FALSE(lambda_partitionable(complete_multipartite(PartSizes({2, 4})), IntegerPartition({2})).witness);

    // Degenerate and exhaustive evidence for k >= 3.
    auto c5 = lambda_partitionable(cycle_graph(5), IntegerPartition({3}));
    REQUIRE(c5.witness);
    CHECK(c5.witness->blocks[0].evidence == BlockEvidence::Degenerate);
    auto k33 = lambda_partitionable(complete_multipartite(PartSizes({3, 3})), IntegerPartition({3}));
    REQUIRE(k33.witness);
    CHECK(k33.witness->blocks[0].evidence == BlockEvidence::Exhaustive);
    CHECK(validate_partitionability(complete_multipartite(PartSizes({3, 3})), *k33.witness));

    // Tampered certificates fail.
    auto forged = *p.witness;
    forged.blocks[1].vertices.push_back(5);
    forged.blocks[0].vertices.erase(forged.blocks[0].vertices.begin());
    CHECK_FALSE(validate_partitionability(k233, forged));
    auto missing = *p.witness;
    missing.blocks[0].vertices.pop_back();
    CHECK_FALSE(validate_partitionability(k233, missing));
    auto wrong_k = *p.witness;
    std::swap(wrong_k.blocks[0], wrong_k.blocks[1]);
    CHECK_FALSE(validate_partitionability(k233, wrong_k));
}

TEST_CASE("partitionable graphs color every assignment block by block")
{
    struct Case {
        Graph g;
        IntegerPartition lambda;
    };
    std::vector<Case> cases{
        {complete_multipartite(PartSizes({1, 2, 2})), IntegerPartition({1, 2})},
        {complete_multipartite(PartSizes({2, 2, 2})), IntegerPartition({1, 2})},
        {complete_graph(4), IntegerPartition({1, 1, 2})},
        {cycle_graph(5), IntegerPartition({1, 2})},
        {complete_multipartite(PartSizes({1, 1, 3})), IntegerPartition({1, 2})},
    };
    for (const auto& c : cases) {
        auto p = lambda_partitionable(c.g, c.lambda);
        REQUIRE(p.witness);
        REQUIRE(validate_partitionability(c.g, *p.witness));
        std::size_t count = 0;
        enumerate_assignments(c.g, c.lambda, [&](const ColumnAssignment& col) {
            auto a = to_lambda_assignment(col, c.lambda);
            auto coloring = color_via_partition(c.g, *p.witness, a);
            REQUIRE(coloring);
            CHECK(validate_coloring(c.g, a.base, *coloring));
            ++count;
            return Visit::Continue;
        });
        CHECK(count > 0);
    }
}

TEST_CASE("bad witnesses re-validate")
{
    for (auto sizes : {std::vector<int>{2, 4}, {1, 1}, {3, 3}}) {
        const Graph g = complete_multipartite(PartSizes(sizes));
        auto v = lambda_choosable(g, IntegerPartition({2}));
        if (v.bad) {
            CHECK(validate_bad_witness(g, *v.bad));
            CHECK(v.bad->nodes_searched > 0);
        }
    }
    auto colorable = BadAssignmentWitness{LambdaAssignment{ListAssignment({{1, 2}, {1, 2}}), ColorGrouping{{{1, 2}}},
                                                           IntegerPartition({2})},
                                          0};
    CHECK_FALSE(validate_bad_witness(complete_graph(2), colorable));
}
