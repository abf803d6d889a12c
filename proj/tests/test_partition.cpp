#include "doctest.h"

#include "oracles.hpp"
#include "strictcol/error.hpp"
#include "strictcol/partition.hpp"

using namespace strictcol;

namespace {

IntegerPartition P(const char* s) { return IntegerPartition::parse(s); }

std::vector<IntegerPartition> all_up_to(int w)
{
    std::vector<IntegerPartition> out;
    for (int k = 1; k <= w; ++k)
        for (auto& p : enumerate_partitions(k))
            out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("parse and format")
{
    auto p = P("1*4,2");
    CHECK(p.parts().size() == 5);
    CHECK(p.weight() == 6);
    CHECK(p.part_count() == 5);
    CHECK(p.to_string() == "1,1,1,1,2");
    CHECK(p.braced() == "{1,1,1,1,2}");

    CHECK(P("3").weight() == 3);
    CHECK(P("2,1,1").to_string() == "1,1,2");
    CHECK(P(" 2 , 1*2 ") == P("1,1,2"));
    CHECK(format_partition(parse_partition("3*2,1")) == "1,3,3");

    for (const char* s : {"1*4,2", "7", "1,2,2,3"}) {
        auto once = format_partition(parse_partition(s));
        CHECK(format_partition(parse_partition(once)) == once);
    }
}

TEST_CASE("parse errors name the term")
{
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("0"), ParseError);
    CHECK_THROWS_AS(P("-2"), ParseError);
    CHECK_THROWS_AS(P("2*0"), ParseError);
    CHECK_THROWS_AS(P("1,,2"), ParseError);
    try {
        P("1,x3,2");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("x3") != std::string::npos);
    }
    CHECK_THROWS_AS(IntegerPartition(std::vector<int>{}), PreconditionError);
    CHECK_THROWS_AS(IntegerPartition(std::vector<int>{1, 0}), PreconditionError);
}

TEST_CASE("enumerate partitions")
{
    auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == P("1,1,1,1"));
    CHECK(four[1] == P("1,1,2"));
    CHECK(four[2] == P("1,3"));
    CHECK(four[3] == P("2,2"));
    CHECK(four[4] == P("4"));
    CHECK(enumerate_partitions(1) == std::vector<IntegerPartition>{P("1")});

    auto seven = enumerate_partitions(7);
    CHECK(seven.size() == 15);
    CHECK(std::find(seven.begin(), seven.end(), P("1,1,2,3")) != seven.end());

    for (int k = 1; k <= 20; ++k) {
        auto all = enumerate_partitions(k);
        CHECK(all.size() == oracle::partition_count(k));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& p : all)
            CHECK(p.weight() == k);
    }
    CHECK_THROWS_AS(enumerate_partitions(0), BoundError);
    CHECK_THROWS_AS(enumerate_partitions(31), BoundError);
    CHECK_THROWS_AS(enumerate_partitions(9, 8), BoundError);
}

TEST_CASE("refinement")
{
    auto w = is_refinement(P("1,1,3"), P("2,3"));
    REQUIRE(w);
    CHECK(check_grouping(P("1,1,3"), P("2,3").parts(), *w, true));
    CHECK(w->assignment == std::vector<int>{0, 0, 1});

    auto id = is_refinement(P("1,2,4"), P("1,2,4"));
    REQUIRE(id);
    CHECK(id->assignment == std::vector<int>{0, 1, 2});

    CHECK_FALSE(is_refinement(P("2,2"), P("1,3")));
    CHECK_FALSE(is_refinement(P("1,1"), P("3")));

    auto all = all_up_to(7);
    for (const auto& f : all)
        for (const auto& c : all) {
            auto r = is_refinement(f, c);
            CHECK(r.has_value() == oracle::refines(f, c));
            if (r)
                CHECK(check_grouping(f, c.parts(), *r, true));
        }
}

TEST_CASE("Zhu order")
{
    auto w = leq(P("3,3"), P("1,1,2,4"));
    REQUIRE(w);
    REQUIRE(w->intermediate);
    CHECK(*w->intermediate == P("3,5"));
    CHECK(check_grouping(P("1,1,2,4"), P("3,3").parts(), *w, false));

    CHECK(leq(P("1,2,4"), P("1,2,4")));
    CHECK_FALSE(leq(P("1,1,2"), P("2,2")));
    CHECK_FALSE(leq(P("5"), P("1,3")));

    auto all = all_up_to(6);
    for (const auto& lo : all)
        for (const auto& hi : all) {
            auto r = leq(lo, hi);
            CHECK(r.has_value() == oracle::leq(lo, hi));
            if (r) {
                CHECK(check_grouping(hi, lo.parts(), *r, false));
                REQUIRE(r->intermediate);
                CHECK(r->intermediate->weight() == hi.weight());
            }
            if (lo.weight() == hi.weight())
                CHECK(r.has_value() == is_refinement(hi, lo).has_value());
        }
}

TEST_CASE("Zhu order is a preorder with {k} and {1*k} as extremes")
{
    auto all = all_up_to(6);
    for (const auto& a : all) {
        CHECK(leq(a, a));
        for (const auto& b : all) {
            if (!leq(a, b))
                continue;
            for (const auto& c : all)
                if (leq(b, c))
                    CHECK(leq(a, c));
        }
    }
    for (int k = 1; k <= 10; ++k)
        for (const auto& p : enumerate_partitions(k)) {
            CHECK(leq(IntegerPartition({k}), p));
            CHECK(leq(p, IntegerPartition::all_ones(k)));
        }
}

TEST_CASE("refinement Hasse diagram")
{
    auto h3 = refinement_hasse(3);
    REQUIRE(h3.nodes.size() == 3);
    std::set<std::pair<std::string, std::string>> e3;
    for (auto [a, b] : h3.edges)
        e3.insert({h3.nodes[static_cast<std::size_t>(a)].to_string(), h3.nodes[static_cast<std::size_t>(b)].to_string()});
    CHECK(e3 == std::set<std::pair<std::string, std::string>>{{"3", "1,2"}, {"1,2", "1,1,1"}});

    CHECK(refinement_hasse(1).edges.empty());

    // Covering edges from the oracle: refinement with nothing strictly between.
    for (int k = 1; k <= 7; ++k) {
        auto h = refinement_hasse(k);
        const auto& nodes = h.nodes;
        std::set<std::pair<int, int>> expect;
        for (int c = 0; c < static_cast<int>(nodes.size()); ++c)
            for (int f = 0; f < static_cast<int>(nodes.size()); ++f) {
                if (c == f || !oracle::refines(nodes[static_cast<std::size_t>(f)], nodes[static_cast<std::size_t>(c)]))
                    continue;
                bool between = false;
                for (int m = 0; m < static_cast<int>(nodes.size()) && !between; ++m)
                    between = m != c && m != f &&
                              oracle::refines(nodes[static_cast<std::size_t>(m)], nodes[static_cast<std::size_t>(c)]) &&
                              oracle::refines(nodes[static_cast<std::size_t>(f)], nodes[static_cast<std::size_t>(m)]);
                if (!between)
                    expect.insert({c, f});
            }
        std::set<std::pair<int, int>> got(h.edges.begin(), h.edges.end());
        CHECK(got == expect);
    }

    auto h4 = refinement_hasse(4);
    auto idx = [&](const char* s) {
        return static_cast<int>(std::find(h4.nodes.begin(), h4.nodes.end(), P(s)) - h4.nodes.begin());
    };
    std::set<std::pair<int, int>> e4(h4.edges.begin(), h4.edges.end());
    CHECK(e4.count({idx("2,2"), idx("1,1,2")}) == 1);
    CHECK(e4.count({idx("2,2"), idx("1,1,1,1")}) == 0);

    const std::string dot = h3.to_dot();
    CHECK(dot.rfind("digraph refinement {", 0) == 0);
    CHECK(dot.find("label=\"{1,2}\"") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK_THROWS_AS(refinement_hasse(13), BoundError);
}
