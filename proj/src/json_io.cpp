#include "strictcol/json_io.hpp"

#include <fstream>
#include <sstream>

#include "strictcol/error.hpp"

namespace strictcol::io {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j)
        out.push_back(as_int(x, what));
    return out;
}

int vertex_key(const std::string& key, int n)
{
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || v < 0 || (n >= 0 && v >= n))
        throw ParseError("bad vertex key \"" + key + "\"");
    return v;
}

IntegerPartition lambda_from(const Json& j)
{
    if (j.is_string())
        return IntegerPartition::parse(j.get<std::string>());
    return IntegerPartition(int_array(j, "lambda"));
}

Json ints(std::span<const int> xs) { return Json(std::vector<int>(xs.begin(), xs.end())); }

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    Json j{{"n", g.n()}, {"edges", edges}};
    if (g.part_label())
        j["parts"] = g.parts();
    return j;
}

Graph graph_from_json(const Json& j)
{
    try {
        const int n = as_int(field(j, "n"), "n");
        if (n < 0 || n > kMaxVertices)
            throw ParseError("n must be in 0.." + std::to_string(kMaxVertices));
        Graph g(n);
        const Json& edges = field(j, "edges");
        if (!edges.is_array())
            throw ParseError("edges must be an array");
        for (const auto& e : edges) {
            auto uv = int_array(e, "edge");
            if (uv.size() != 2)
                throw ParseError("an edge needs two endpoints");
            g.add_edge(uv[0], uv[1]);
        }
        if (j.contains("parts")) {
            std::vector<int> label(static_cast<std::size_t>(n), -1);
            const Json& parts = j.at("parts");
            if (!parts.is_array())
                throw ParseError("parts must be an array");
            for (std::size_t p = 0; p < parts.size(); ++p)
                for (int v : int_array(parts[p], "part")) {
                    if (v < 0 || v >= n || label[static_cast<std::size_t>(v)] >= 0)
                        throw ParseError("parts must cover each vertex once");
                    label[static_cast<std::size_t>(v)] = static_cast<int>(p);
                }
            g.set_part_label(std::move(label));
        }
        return g;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const ListAssignment& lists)
{
    Json obj = Json::object();
    for (int v = 0; v < lists.vertex_count(); ++v)
        obj[std::to_string(v)] = lists.list(v);
    return Json{{"lists", obj}};
}

ListAssignment lists_from_json(const Json& j)
{
    const Json& obj = j.is_object() && j.contains("lists") ? j.at("lists") : j;
    if (!obj.is_object())
        throw ParseError("lists must be an object keyed by vertex");
    const int n = static_cast<int>(obj.size());
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const int v = vertex_key(it.key(), n);
        lists[static_cast<std::size_t>(v)] = int_array(it.value(), "list");
    }
    try {
        return ListAssignment(std::move(lists));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const ColoringWitness& w)
{
    Json obj = Json::object();
    for (std::size_t v = 0; v < w.colors.size(); ++v)
        obj[std::to_string(v)] = w.colors[v];
    return obj;
}

ColoringWitness coloring_from_json(const Json& j, int n)
{
    if (!j.is_object())
        throw ParseError("coloring must be an object keyed by vertex");
    ColoringWitness w{std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (auto it = j.begin(); it != j.end(); ++it)
        w.colors[static_cast<std::size_t>(vertex_key(it.key(), n))] = as_int(it.value(), "color");
    return w;
}

Json to_json(const ColorResult& r)
{
    Json j{{"colorable", r.colorable()}};
    if (r.coloring)
        j["coloring"] = to_json(*r.coloring);
    j["nodes_searched"] = r.nodes_searched;
    return j;
}

Json to_json(const LambdaAssignment& a)
{
    return Json{{"lambda", ints(a.lambda.parts())},
                {"lists", to_json(a.base)["lists"]},
                {"groups", a.grouping.groups}};
}

LambdaAssignment lambda_assignment_from_json(const Json& j)
{
    try {
        IntegerPartition lambda = lambda_from(field(j, "lambda"));
        ListAssignment lists = lists_from_json(field(j, "lists"));
        const Json& gs = field(j, "groups");
        if (!gs.is_array())
            throw ParseError("groups must be an array");
        ColorGrouping grouping;
        for (const auto& g : gs)
            grouping.groups.push_back(int_array(g, "group"));
        return LambdaAssignment{std::move(lists), std::move(grouping), std::move(lambda)};
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const LambdaReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(v.message);
    return Json{{"valid", r.valid}, {"group_targets", r.group_targets}, {"violations", violations}};
}

Json to_json(const BadAssignmentWitness& w)
{
    return Json{{"kind", "bad-assignment"}, {"assignment", to_json(w.assignment)}, {"nodes_searched", w.nodes_searched}};
}

BadAssignmentWitness bad_witness_from_json(const Json& j)
{
    if (j.is_object() && j.contains("assignment")) {
        BadAssignmentWitness w{lambda_assignment_from_json(j.at("assignment")), 0};
        if (j.contains("nodes_searched") && j.at("nodes_searched").is_number_unsigned())
            w.nodes_searched = j.at("nodes_searched").get<std::uint64_t>();
        return w;
    }
    return BadAssignmentWitness{lambda_assignment_from_json(j), 0};
}

Json to_json(const PartitionabilityWitness& w)
{
    Json blocks = Json::array();
    for (const auto& b : w.blocks)
        blocks.push_back(Json{{"k", b.k},
                              {"vertices", b.vertices},
                              {"evidence", to_string(b.evidence)},
                              {"classes_examined", b.classes_examined}});
    return Json{{"kind", "partition"}, {"lambda", ints(w.lambda.parts())}, {"blocks", blocks}};
}

PartitionabilityWitness partition_witness_from_json(const Json& j)
{
    try {
        PartitionabilityWitness w{lambda_from(field(j, "lambda")), {}};
        const Json& blocks = field(j, "blocks");
        if (!blocks.is_array())
            throw ParseError("blocks must be an array");
        for (const auto& b : blocks) {
            PartitionBlock pb;
            pb.k = as_int(field(b, "k"), "k");
            pb.vertices = int_array(field(b, "vertices"), "vertices");
            const Json& ev = field(b, "evidence");
            const std::string e = ev.is_string() ? ev.get<std::string>() : "";
            if (e == "independent")
                pb.evidence = BlockEvidence::Independent;
            else if (e == "ert-core")
                pb.evidence = BlockEvidence::ErtCore;
            else if (e == "degenerate")
                pb.evidence = BlockEvidence::Degenerate;
            else if (e == "exhaustive")
                pb.evidence = BlockEvidence::Exhaustive;
            else
                throw ParseError("unknown block evidence \"" + e + "\"");
            w.blocks.push_back(std::move(pb));
        }
        return w;
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const Case2Transcript& t)
{
    Json rounds = Json::array();
    for (const auto& r : t.rounds)
        rounds.push_back(Json{{"step", r.step},
                              {"singleton_part", r.singleton_part},
                              {"c1_parts", r.c1_parts},
                              {"colored", r.colored},
                              {"hj_pattern", r.hj_pattern}});
    Json j{{"kind", "case2-transcript"}, {"rounds", rounds}, {"final_step", t.final_step}};
    if (!t.branch.empty())
        j["branch"] = t.branch;
    if (!t.extra.empty())
        j["extra"] = t.extra;
    j["coloring"] = to_json(t.final);
    return j;
}

Json to_json(const LambdaVerdict& v)
{
    Json j;
    if (v.decision == Decision::Undecided)
        j["choosable"] = nullptr;
    else
        j["choosable"] = v.decision == Decision::Choosable;
    j["decision"] = to_string(v.decision);
    j["provenance"] = to_string(v.provenance);
    j["classes_examined"] = v.classes_examined;
    j["nodes_searched"] = v.nodes_searched;
    if (v.bad)
        j["witness"] = to_json(*v.bad);
    if (v.partition)
        j["witness"] = to_json(*v.partition);
    if (!v.note.empty())
        j["note"] = v.note;
    return j;
}

Json to_json(const ChoosabilityVerdict& v)
{
    Json j{{"choosable", v.choosable}, {"classes_examined", v.classes_examined}, {"nodes_searched", v.nodes_searched}};
    if (v.bad)
        j["bad"] = to_json(*v.bad)["lists"];
    return j;
}

Json to_json(const StrictDecision& d)
{
    Json j;
    j["sizes"] = d.sizes ? ints(d.sizes->sizes()) : Json(nullptr);
    j["k"] = d.k;
    if (d.decided)
        j["strict"] = d.strict;
    else
        j["strict"] = nullptr;
    j["reason"] = to_string(d.reason);
    if (d.chromatic)
        j["chromatic_number"] = *d.chromatic;
    if (d.reason == StrictReason::Search)
        j["classes_examined"] = d.classes_examined;
    Json cert = nullptr;
    if (const auto* bad = std::get_if<BadAssignmentWitness>(&d.certificate))
        cert = to_json(*bad);
    else if (const auto* part = std::get_if<PartitionabilityWitness>(&d.certificate))
        cert = to_json(*part);
    else if (const auto* tr = std::get_if<Case2Transcript>(&d.certificate)) {
        cert = to_json(*tr);
        if (d.case2_input)
            cert["input"] = to_json(*d.case2_input);
    }
    j["certificate"] = cert;
    if (!d.note.empty())
        j["note"] = d.note;
    return j;
}

} // namespace strictcol::io
