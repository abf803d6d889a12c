#include <iostream>

#include "CLI11.hpp"

#include "cli.hpp"
#include "strictcol/error.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"strictcol: list coloring, lambda-choosability and strict k-colorability"};
    app.require_subcommand(1);
    cli::Globals globals;
    app.add_flag("-q,--quiet", globals.quiet, "suppress diagnostics on stderr");
    app.add_option("--workers", globals.workers, "enumeration worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", globals.seed, "seed for random trials");

    cli::PartitionsArgs pa;
    auto* parts = app.add_subcommand("partitions", "integer partitions and Zhu's order");
    parts->require_subcommand(1);
    auto* plist = parts->add_subcommand("list", "all partitions of k");
    plist->add_option("k", pa.a)->required();
    auto* porder = parts->add_subcommand("order", "decide lambda <= lambda'");
    porder->add_option("lambda", pa.a)->required();
    porder->add_option("lambda2", pa.b)->required();
    auto* phasse = parts->add_subcommand("hasse", "refinement Hasse diagram as DOT");
    phasse->add_option("k", pa.a)->required();

    cli::CheckArgs ca;
    auto* check = app.add_subcommand("check", "colorability and choosability verdicts");
    check->require_subcommand(1);
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", ca.graph, "graph JSON file");
        sub->add_option("--parts", ca.parts, "part sizes of a complete multipartite graph, e.g. 2,4,5");
    };
    auto* clist = check->add_subcommand("list-color", "L-color a graph");
    add_graph(clist);
    clist->add_option("--lists", ca.lists, "list assignment, lambda-assignment or certificate JSON")->required();
    auto* cval = check->add_subcommand("lambda-validate", "validate a lambda-assignment");
    cval->add_option("--witness", ca.witness, "lambda-assignment or bad-assignment JSON")->required();
    auto* cch = check->add_subcommand("lambda-choosable", "decide lambda-choosability");
    add_graph(cch);
    cch->add_option("--lambda", ca.lambda, "partition, e.g. 1,2")->required();
    cch->add_option("--bound", ca.bound, "largest enumeration size searched exhaustively");
    auto* ck = check->add_subcommand("k-choosable", "decide k-choosability");
    add_graph(ck);
    ck->add_option("--k", ca.k)->required();
    ck->add_option("--bound", ca.bound, "largest n*k searched exhaustively");
    auto* ccert = check->add_subcommand("certificate", "re-validate a certificate written by this tool");
    add_graph(ccert);
    ccert->add_option("--witness", ca.witness, "certificate JSON")->required();

    cli::StrictArgs sa;
    auto* strict = app.add_subcommand("strict", "strict k-colorability");
    strict->require_subcommand(1);
    auto* scheck = strict->add_subcommand("check", "decide strict k-colorability");
    scheck->add_option("--parts", sa.parts, "part sizes of a complete k-partite graph");
    scheck->add_option("--graph", sa.graph, "graph JSON file (search only)");
    scheck->add_option("--k", sa.k, "k for --graph");
    scheck->add_option("--method", sa.method)->check(CLI::IsMember({"theorem", "search"}));
    scheck->add_option("--bound", sa.bound, "largest enumeration size searched exhaustively");
    auto* switness = strict->add_subcommand("witness", "bad lambda_k-assignment of a minimal family");
    switness->add_option("family", sa.family)->required()->check(CLI::IsMember({"k3k", "k246", "k255"}));
    switness->add_option("k", sa.family_k)->required();

    cli::VerifyArgs va;
    auto* verify = app.add_subcommand("verify-paper", "re-check every desk-scale claim and write certificates");
    verify->add_option("--k-max", va.k_max, "largest k for the family witnesses")->check(CLI::Range(3, 12));
    verify->add_option("--out", va.out, "directory for certificates and report.json");
    verify->add_flag("--recheck", va.recheck, "validate the certificates already in --out instead of rewriting them");
    verify->add_option("--trials", va.trials, "random Case-2 assignments")->check(CLI::Range(0, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }

    try {
        if (parts->parsed()) {
            pa.action = plist->parsed() ? "list" : porder->parsed() ? "order" : "hasse";
            return cli::cmd_partitions(pa, globals);
        }
        if (check->parsed()) {
            for (auto* sub : check->get_subcommands())
                ca.action = sub->get_name();
            return cli::cmd_check(ca, globals);
        }
        if (strict->parsed()) {
            sa.action = scheck->parsed() ? "check" : "witness";
            return cli::cmd_strict(sa, globals);
        }
        return cli::cmd_verify_paper(va, globals);
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const strictcol::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const strictcol::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const strictcol::BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return cli::kUndecided;
    }
}
