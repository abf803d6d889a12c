#include <algorithm>
#include <iostream>
#include <string>

#include "cli.hpp"
#include "strictcol/error.hpp"
#include "strictcol/list_color.hpp"
#include "strictcol/partition.hpp"
#include "strictcol/strict.hpp"

namespace cli {

using namespace strictcol;
using io::Json;

namespace {

int parse_int(const std::string& s, const char* what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw UsageError(std::string(what) + " must be an integer, got \"" + s + "\"");
    return v;
}

// A strict decision keeps its certificate under "certificate", a lambda
// verdict under "witness".
const Json* nested_certificate(const Json& j)
{
    for (const char* key : {"certificate", "witness"})
        if (j.is_object() && j.contains(key) && j.at(key).is_object())
            return &j.at(key);
    return nullptr;
}

// Digs the list assignment out of whatever the tool may have written.
ListAssignment load_lists(const Json& j)
{
    if (const Json* inner = nested_certificate(j))
        return load_lists(*inner);
    if (j.is_object() && j.contains("bad"))
        return io::lists_from_json(j.at("bad"));
    if (j.is_object() && j.contains("assignment"))
        return load_lists(j.at("assignment"));
    if (j.is_object() && j.contains("input"))
        return load_lists(j.at("input"));
    return io::lists_from_json(j);
}

LambdaAssignment load_lambda_assignment(const Json& j)
{
    if (const Json* inner = nested_certificate(j))
        return load_lambda_assignment(*inner);
    if (j.is_object() && j.contains("input"))
        return io::lambda_assignment_from_json(j.at("input"));
    return io::bad_witness_from_json(j).assignment;
}

} // namespace

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

Graph load_graph(const std::string& graph_file, const std::string& parts)
{
    if (graph_file.empty() == parts.empty())
        throw UsageError("give exactly one of --graph and --parts");
    if (!parts.empty())
        return complete_multipartite(PartSizes::parse(parts));
    return io::graph_from_json(io::read_json_file(graph_file));
}

bool certificate_holds(const Graph& g, const Json& cert, std::string& why)
{
    if (!cert.is_object()) {
        why = "certificate is not an object";
        return false;
    }
    if (const Json* inner = nested_certificate(cert))
        return certificate_holds(g, *inner, why);
    const std::string kind = cert.contains("kind") && cert.at("kind").is_string() ? cert.at("kind").get<std::string>() : "";
    if (kind == "bad-assignment") {
        const auto w = io::bad_witness_from_json(cert);
        if (w.assignment.base.vertex_count() != g.n()) {
            why = "assignment size does not match the graph";
            return false;
        }
        const auto report = validate_lambda(w.assignment);
        if (!report.valid) {
            why = report.violations.front().message;
            return false;
        }
        if (!validate_bad_witness(g, w)) {
            why = "the assignment is colorable";
            return false;
        }
        return true;
    }
    if (kind == "partition") {
        if (!validate_partitionability(g, io::partition_witness_from_json(cert))) {
            why = "a block is not certified at its level";
            return false;
        }
        return true;
    }
    if (kind == "case2-transcript") {
        if (!cert.contains("input") || !cert.contains("coloring")) {
            why = "transcript lacks its input or coloring";
            return false;
        }
        const auto input = io::lambda_assignment_from_json(cert.at("input"));
        if (!validate_lambda(input).valid || input.base.vertex_count() != g.n()) {
            why = "transcript input is not a lambda-assignment of this graph";
            return false;
        }
        if (!validate_coloring(g, input.base, io::coloring_from_json(cert.at("coloring"), g.n()))) {
            why = "final coloring is not a proper L-coloring";
            return false;
        }
        return true;
    }
    why = "unknown certificate kind \"" + kind + "\"";
    return false;
}

int cmd_partitions(const PartitionsArgs& args, const Globals&)
{
    if (args.action == "list") {
        for (const auto& p : enumerate_partitions(parse_int(args.a, "k")))
            std::cout << p.to_string() << '\n';
        return kYes;
    }
    if (args.action == "order") {
        const auto lo = IntegerPartition::parse(args.a);
        const auto hi = IntegerPartition::parse(args.b);
        const auto w = leq(lo, hi);
        if (!w) {
            std::cout << "NLE\n";
            return kNo;
        }
        std::cout << "LE via " << w->intermediate->braced() << '\n';
        return kYes;
    }
    std::cout << refinement_hasse(parse_int(args.a, "k")).to_dot();
    return kYes;
}

int cmd_check(const CheckArgs& args, const Globals& globals)
{
    if (args.action == "list-color") {
        const Graph g = load_graph(args.graph, args.parts);
        const auto lists = load_lists(io::read_json_file(args.lists));
        if (lists.vertex_count() != g.n())
            throw UsageError("lists cover " + std::to_string(lists.vertex_count()) + " vertices, graph has " +
                             std::to_string(g.n()));
        const auto r = l_color(g, lists);
        print_json(io::to_json(r));
        return r.colorable() ? kYes : kNo;
    }
    if (args.action == "lambda-validate") {
        const auto a = load_lambda_assignment(io::read_json_file(args.witness));
        const auto report = validate_lambda(a);
        print_json(io::to_json(report));
        for (const auto& v : report.violations)
            globals.diag(v.message);
        return report.valid ? kYes : kNo;
    }
    if (args.action == "lambda-choosable") {
        const Graph g = load_graph(args.graph, args.parts);
        const auto v = lambda_choosable(g, IntegerPartition::parse(args.lambda), args.bound, globals.enumeration());
        print_json(io::to_json(v));
        if (!v.note.empty())
            globals.diag(v.note);
        return v.decision == Decision::Choosable ? kYes : v.decision == Decision::NotChoosable ? kNo : kUndecided;
    }
    if (args.action == "k-choosable") {
        const Graph g = load_graph(args.graph, args.parts);
        if (args.k < 1)
            throw UsageError("--k must be positive");
        try {
            const auto v = k_choosable(g, args.k, args.bound, globals.enumeration());
            print_json(io::to_json(v));
            return v.choosable ? kYes : kNo;
        } catch (const BoundError& e) {
            print_json(Json{{"choosable", nullptr}, {"note", e.what()}});
            return kUndecided;
        }
    }
    // certificate
    const Graph g = load_graph(args.graph, args.parts);
    std::string why;
    const bool ok = certificate_holds(g, io::read_json_file(args.witness), why);
    Json out{{"valid", ok}};
    if (!ok)
        out["reason"] = why;
    print_json(out);
    return ok ? kYes : kNo;
}

int cmd_strict(const StrictArgs& args, const Globals& globals)
{
    if (args.action == "witness") {
        const StrictFamily f = args.family == "k3k"   ? StrictFamily::K3k
                               : args.family == "k246" ? StrictFamily::K246
                                                       : StrictFamily::K255;
        const auto w = family_witness(f, args.family_k);
        const PartSizes sizes = family_sizes(f, args.family_k);
        Json j{{"kind", "bad-assignment"},
               {"sizes", std::vector<int>(sizes.sizes().begin(), sizes.sizes().end())},
               {"assignment", io::to_json(w)}};
        print_json(j);
        return kYes;
    }

    StrictDecision d;
    if (args.method == "theorem") {
        if (args.parts.empty())
            throw UsageError("--method theorem needs --parts");
        const auto sizes = PartSizes::parse(args.parts);
        if (sizes.k() < 3)
            throw UsageError("the theorem covers complete k-partite graphs with k >= 3 only; got k = " +
                             std::to_string(sizes.k()) + ", use --method search");
        d = decide_strict_cmp(sizes);
    } else {
        const Graph g = load_graph(args.graph, args.parts);
        int k = 0;
        if (!args.parts.empty())
            k = PartSizes::parse(args.parts).k();
        if (args.k)
            k = *args.k;
        if (k < 1)
            throw UsageError("--graph needs --k");
        d = decide_strict_search(g, k, args.bound, globals.enumeration());
    }
    print_json(io::to_json(d));
    if (!d.note.empty())
        globals.diag(d.note);
    if (!d.decided)
        return kUndecided;
    return d.strict ? kYes : kNo;
}

} // namespace cli
