#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "strictcol/enumerate.hpp"
#include "strictcol/graph.hpp"
#include "strictcol/json_io.hpp"

namespace cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUndecided = 2;
inline constexpr int kUsage = 64;

struct Globals {
    bool quiet = false;
    int workers = 1;
    std::uint32_t seed = 0;

    strictcol::EnumerationOptions enumeration() const
    {
        strictcol::EnumerationOptions o;
        o.workers = workers;
        return o;
    }
    void diag(const std::string& msg) const
    {
        if (!quiet)
            std::cerr << msg << '\n';
    }
};

/// Thrown for bad arguments or malformed input files; main maps it to 64.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_json(const strictcol::io::Json& j);

/// --graph FILE or --parts SIZES; exactly one must be given.
strictcol::Graph load_graph(const std::string& graph_file, const std::string& parts);

/// Whether a certificate (bad-assignment, partition, case2-transcript, or a
/// strict decision holding one) is valid for `g`. `why` names the failure.
bool certificate_holds(const strictcol::Graph& g, const strictcol::io::Json& cert, std::string& why);

struct PartitionsArgs {
    std::string action;
    std::string a, b;
};
int cmd_partitions(const PartitionsArgs& args, const Globals& globals);

struct CheckArgs {
    std::string action;
    std::string graph, parts, lists, lambda, witness;
    int k = 2;
    int bound = 30;
};
int cmd_check(const CheckArgs& args, const Globals& globals);

struct StrictArgs {
    std::string action;
    std::string parts, graph, method = "theorem";
    std::optional<int> k;
    int bound = 30;
    std::string family;
    int family_k = 3;
};
int cmd_strict(const StrictArgs& args, const Globals& globals);

struct VerifyArgs {
    int k_max = 6;
    std::string out = "report";
    bool recheck = false;
    int trials = 2000;
};
int cmd_verify_paper(const VerifyArgs& args, const Globals& globals);

} // namespace cli
