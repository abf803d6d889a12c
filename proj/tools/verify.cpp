#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "strictcol/list_color.hpp"
#include "strictcol/partition.hpp"
#include "strictcol/sampling.hpp"
#include "strictcol/strict.hpp"

namespace cli {

using namespace strictcol;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct ReportEntry {
    std::string claim_id;
    std::string status; // pass | fail | skipped
    std::string detail;
    double elapsed = 0;
};

// Outcome of one claim: pass flag plus the certificate path or the reason.
struct Result {
    bool pass = false;
    std::string detail;
};

class Runner {
public:
    Runner(const VerifyArgs& args, const Globals& globals) : args_(args), globals_(globals) {}

    void claim(const std::string& id, const std::function<Result()>& body)
    {
        const auto t0 = std::chrono::steady_clock::now();
        ReportEntry e{id, "fail", "", 0};
        try {
            const Result r = body();
            e.status = r.pass ? "pass" : "fail";
            e.detail = r.detail;
        } catch (const std::exception& ex) {
            e.detail = ex.what();
        }
        e.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        globals_.diag(id + ": " + e.status);
        entries_.push_back(std::move(e));
    }

    // Writes `cert` (unless rechecking) and reads it back from disk.
    Json round_trip(const std::string& name, const Json& cert) const
    {
        const std::string path = (fs::path(args_.out) / name).string();
        if (!args_.recheck)
            io::write_json_file(path, cert);
        return io::read_json_file(path);
    }

    std::string path(const std::string& name) const { return (fs::path(args_.out) / name).string(); }

    int finish() const
    {
        std::size_t width = 8;
        for (const auto& e : entries_)
            width = std::max(width, e.claim_id.size());
        int failed = 0;
        Json list = Json::array();
        std::printf("%-*s  %-7s  %8s  %s\n", static_cast<int>(width), "claim", "status", "elapsed", "detail");
        for (const auto& e : entries_) {
            std::printf("%-*s  %-7s  %7.2fs  %s\n", static_cast<int>(width), e.claim_id.c_str(), e.status.c_str(),
                        e.elapsed, e.detail.c_str());
            failed += e.status == "fail";
            list.push_back(Json{{"claim_id", e.claim_id}, {"status", e.status}, {"detail", e.detail}, {"elapsed", e.elapsed}});
        }
        io::write_json_file(path("report.json"), Json{{"entries", list}, {"failed", failed}});
        std::printf("%d of %zu claims failed\n", failed, entries_.size());
        return failed == 0 ? kYes : kNo;
    }

private:
    const VerifyArgs& args_;
    const Globals& globals_;
    std::vector<ReportEntry> entries_;
};

Result certified(const Graph& g, const Json& cert, const std::string& path)
{
    std::string why;
    if (!certificate_holds(g, cert, why))
        return {false, path + ": " + why};
    return {true, path};
}

} // namespace

int cmd_verify_paper(const VerifyArgs& args, const Globals& globals)
{
    fs::create_directories(args.out);
    Runner run(args, globals);

    const std::pair<StrictFamily, const char*> families[] = {
        {StrictFamily::K3k, "k3k"}, {StrictFamily::K246, "k246"}, {StrictFamily::K255, "k255"}};
    for (int k = 3; k <= args.k_max; ++k)
        for (const auto& [f, name] : families) {
            const std::string id = std::string("lemma-") + name + "-k" + std::to_string(k);
            run.claim(id, [&, f = f, id] {
                const auto w = family_witness(f, k);
                const Json back = run.round_trip(id + ".json", io::to_json(BadAssignmentWitness{w, 0}));
                const Graph g = complete_multipartite(family_sizes(f, k));
                Result r = certified(g, back, run.path(id + ".json"));
                if (r.pass && l_color_multipartite(family_sizes(f, k), io::bad_witness_from_json(back).assignment.base).colorable())
                    r = {false, "ownership solver colors the witness"};
                return r;
            });
        }

    run.claim("hj-unique-k24", [&] {
        const auto classes = hoffman_johnson_enumerate(2, 4);
        if (classes.size() != 1)
            return Result{false, std::to_string(classes.size()) + " uncolorable classes"};
        const Json back = run.round_trip("hj-unique-k24.json", io::to_json(classes.front()));
        const Graph g = complete_multipartite(PartSizes({2, 4}));
        const auto lists = io::lists_from_json(back);
        if (l_color(g, lists).colorable())
            return Result{false, "stored assignment is colorable"};
        if (canonical_classes(g, lists) != canonical_classes(g, hoffman_johnson_k24()))
            return Result{false, "stored class differs from the classical assignment"};
        return Result{true, run.path("hj-unique-k24.json")};
    });

    run.claim("hj-none-k23", [&] {
        const auto classes = hoffman_johnson_enumerate(2, 3);
        return Result{classes.empty(), std::to_string(classes.size()) + " uncolorable classes"};
    });

    run.claim("k222-choosable-12", [&] {
        const auto v = lambda_choosable(complete_multipartite(PartSizes({2, 2, 2})), IntegerPartition({1, 2}),
                                        kDefaultLambdaBound, globals.enumeration());
        return Result{v.decision == Decision::Choosable && v.provenance == Provenance::Exhaustive,
                      std::to_string(v.classes_examined) + " classes"};
    });

    run.claim("kn-not-strict-k3", [&] {
        const auto v = lambda_choosable(complete_graph(3), IntegerPartition({1, 2}), kDefaultLambdaBound,
                                        globals.enumeration());
        return Result{v.decision == Decision::Choosable, std::to_string(v.classes_examined) + " classes"};
    });

    run.claim("order-example-33", [&] {
        const auto w = leq(IntegerPartition({3, 3}), IntegerPartition({1, 1, 2, 4}));
        const bool ok = w && w->intermediate == IntegerPartition({3, 5});
        return Result{ok, ok ? "via {3,5}" : "wrong or missing witness"};
    });

    run.claim("strict-2-k24", [&] {
        const bool ok = strictly_2_colorable(complete_multipartite(PartSizes({2, 4}))) &&
                        !strictly_2_colorable(complete_multipartite(PartSizes({2, 3})));
        return Result{ok, "K_{2,4} strict, K_{2,3} not"};
    });

    run.claim("choice-number-k24", [&] {
        const auto c = choice_number(complete_multipartite(PartSizes({2, 4})), 4, kDefaultKAssignmentBound,
                                     globals.enumeration());
        return Result{c.value == 3, c.value ? "ch = " + std::to_string(*c.value) : "not found"};
    });

    run.claim("theorem-k3-triples", [&] {
        Json decisions = Json::array();
        std::vector<PartSizes> sizes;
        for (int a = 1; a <= 7; ++a)
            for (int b = a; b <= 7; ++b)
                for (int c = b; c <= 7; ++c) {
                    sizes.emplace_back(std::vector<int>{a, b, c});
                    decisions.push_back(io::to_json(decide_strict_cmp(sizes.back())));
                }
        const Json back = run.round_trip("theorem-k3.json", decisions);
        if (!back.is_array() || back.size() != sizes.size())
            return Result{false, "decision file has the wrong shape"};
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const PartSizes& s = sizes[i];
            const bool contains = contains_parts(s, PartSizes({3, 3, 3})) ||
                                  contains_parts(s, PartSizes({2, 4, 6})) || contains_parts(s, PartSizes({2, 5, 5}));
            const Json& d = back[i];
            if (!d.contains("strict") || d["strict"] != contains)
                return Result{false, s.to_string() + ": verdict disagrees with containment"};
            std::string why;
            if (!certificate_holds(complete_multipartite(s), d, why))
                return Result{false, s.to_string() + ": " + why};
        }
        return Result{true, run.path("theorem-k3.json")};
    });

    run.claim("case2-colorer", [&] {
        std::mt19937 rng(globals.seed);
        const PartSizes shapes[] = {PartSizes({2, 4, 5}), PartSizes({2, 4, 4}), PartSizes({2, 4, 5, 7})};
        int done = 0;
        for (const auto& s : shapes) {
            const Graph g = complete_multipartite(s);
            for (int i = 0; i < args.trials; ++i, ++done) {
                const auto a = i % 2 ? gen::adversarial_near_coloring(rng, s) : gen::random_near_coloring(rng, s);
                const auto t = case2_color(s, a);
                if (!validate_coloring(g, a.base, t.final))
                    return Result{false, s.to_string() + " trial " + std::to_string(i)};
            }
        }
        return Result{true, std::to_string(done) + " assignments, seed " + std::to_string(globals.seed)};
    });

    return run.finish();
}

} // namespace cli
