// orthocover: generate graphs, check and search for orthogonal colourings and independent
// coverings, run the constructions, export DOT, and re-run the full verification report.
//
// Exit codes: 0 success/found, 1 none/validation failure, 2 inconclusive, 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "orthocover/builders.hpp"
#include "orthocover/constructive.hpp"
#include "orthocover/io.hpp"
#include "orthocover/search.hpp"
#include "orthocover/verify.hpp"

namespace {

using namespace orthocover;

constexpr int exit_ok = 0;
constexpr int exit_none = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 64;
constexpr std::uint64_t default_seed = 20'200'101;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("ORTHOCOVER_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("ORTHOCOVER_BUDGET is not a number: ") + env);
        }
    }
    return default_budget;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

int exit_for(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return exit_ok;
        case SearchStatus::ProvedNone: return exit_none;
        case SearchStatus::Inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

struct GenArgs {
    std::string family;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t parts = 0;
    std::size_t size = 0;
    std::size_t matching = 0;
    std::size_t cap = 0;
    std::size_t d = 0;
    double p = 0.5;
    std::optional<std::uint64_t> seed;
    std::string name;
    std::string out = "-";
    std::string partition_out;
};

int run_gen(const GenArgs& a) {
    const auto seed = a.seed.value_or(default_seed);
    const bool random = a.family == "nkk" || a.family == "tree" || a.family == "degenerate" || a.family == "random";
    if (random && !a.seed) {
        std::cerr << "seed: " << seed << '\n';
    }
    std::optional<Partition> partition;
    Graph g;
    const auto& f = a.family;
    if (f == "colouring") {
        write_json(a.out, to_json(paper_colouring(a.name)));
        return exit_ok;
    } else if (f == "figure1") {
        auto pg = figure1_graph();
        g = pg.graph;
        partition = pg.partition;
    } else if (f == "G1" || f == "G2" || f == "G3") {
        for (auto& named : three_333_graphs()) {
            if (named.name == f) {
                g = named.graph;
                partition = named.partition;
            }
        }
    } else if (f == "double-star") {
        g = double_star(a.m);
    } else if (f == "subdivided-double-star") {
        g = subdivided_double_star(a.n);
    } else if (f == "nkk") {
        auto pg = random_nkk({a.parts, a.size, a.matching, seed});
        g = pg.graph;
        partition = pg.partition;
    } else if (f == "tree") {
        g = random_tree(a.n, a.cap, seed);
    } else if (f == "degenerate") {
        g = random_d_degenerate(a.n, a.d, a.cap, seed);
    } else if (f == "random") {
        g = random_graph(a.n, a.p, seed);
    } else if (f == "rook") {
        g = rook_graph(a.n);
    } else if (f == "empty") {
        g = empty_graph(a.n);
    } else {
        throw UsageError("unknown family '" + f + "'");
    }
    write_json(a.out, to_json(g));
    if (!a.partition_out.empty()) {
        if (!partition) throw UsageError("family '" + f + "' has no partition");
        write_json(a.partition_out, to_json(*partition));
    }
    return exit_ok;
}

struct CheckArgs {
    std::string graph;
    std::string colouring;
    std::string covering;
    std::string partition;
};

int run_check(const CheckArgs& a) {
    const auto g = graph_from_json(read_json(a.graph));
    std::optional<std::string> why;
    try {
        if (!a.colouring.empty()) {
            why = colouring_violation(g, colouring_from_json(read_json(a.colouring)));
        } else if (!a.covering.empty()) {
            if (a.partition.empty()) throw UsageError("--covering needs --partition");
            why = covering_violation(g, partition_from_json(read_json(a.partition)),
                                     covering_from_json(read_json(a.covering)));
        } else {
            throw UsageError("give --colouring or --covering");
        }
    } catch (const InvalidInput& e) {
        why = e.what();
    }
    if (why) {
        std::cout << "invalid: " << *why << '\n';
        return exit_none;
    }
    std::cout << "valid\n";
    return exit_ok;
}

struct SolveArgs {
    std::string graph;
    std::string partition;
    std::size_t colours = 0;
    std::optional<std::uint64_t> budget;
    std::string out = "-";
};

int run_solve(const std::string& what, const SolveArgs& a) {
    const auto g = graph_from_json(read_json(a.graph));
    SearchBudget budget(resolve_budget(a.budget));
    if (what == "ochi") {
        auto outcome = ochi(g, budget);
        std::cerr << "status: " << to_string(outcome.status) << ", nodes: " << outcome.nodes_used << '\n';
        if (outcome.found()) {
            std::cerr << "ochi: " << outcome.witness->value << '\n';
            write_json(a.out, to_json(outcome.witness->witness));
        }
        return exit_for(outcome.status);
    }
    if (what == "colour") {
        auto outcome = find_orthogonal_colouring(g, a.colours, budget);
        std::cerr << "status: " << to_string(outcome.status) << ", nodes: " << outcome.nodes_used << '\n';
        if (outcome.found()) write_json(a.out, to_json(*outcome.witness));
        return exit_for(outcome.status);
    }
    const auto p = partition_from_json(read_json(a.partition));
    auto outcome = find_independent_covering(g, p, budget);
    std::cerr << "status: " << to_string(outcome.status) << ", nodes: " << outcome.nodes_used << '\n';
    if (outcome.found()) write_json(a.out, to_json(*outcome.witness));
    return exit_for(outcome.status);
}

struct ConstructArgs {
    std::string graph;
    std::string partition;
    std::size_t m = 0;
    bool force = false;
    std::string out = "-";
    std::string covering_out;
};

int run_construct(const std::string& what, const ConstructArgs& a) {
    if (what == "double-star") {
        write_json(a.out, to_json(double_star_colouring(a.m)));
        return exit_ok;
    }
    const auto g = graph_from_json(read_json(a.graph));
    if (what == "hall") {
        auto result = hall_covering(g, partition_from_json(read_json(a.partition)));
        write_json(a.out, to_json(result.colouring));
        if (!a.covering_out.empty()) write_json(a.covering_out, to_json(result.covering));
        return exit_ok;
    }
    auto result = degenerate_swap_colouring(g, {.force = a.force, .check_invariants = true});
    std::cerr << "degeneracy: " << result.degeneracy << ", max degree: " << result.max_degree
              << ", swaps: " << result.steps.size() << '\n';
    write_json(a.out, to_json(result.colouring));
    if (!result.valid) {
        std::cerr << "forced run did not produce a valid colouring\n";
        return exit_none;
    }
    return exit_ok;
}

struct DotArgs {
    std::string graph;
    std::string colouring;
    std::string figure;
    std::string out = "-";
};

int run_export_dot(const DotArgs& a) {
    Graph g;
    std::optional<OrthogonalColouring> colouring;
    std::vector<std::string> names;
    if (!a.figure.empty()) {
        if (a.figure == "figure1") {
            g = figure1_graph().graph;
            names = xyz_vertex_names();
        } else if (a.figure == "D14") {
            g = double_star(14);
            names = double_star_vertex_names(14);
            colouring = paper_colouring("D14");
        } else {
            for (auto& named : three_333_graphs()) {
                if (named.name == a.figure) g = named.graph;
            }
            if (g.order() == 0) throw UsageError("unknown figure '" + a.figure + "'");
            names = xyz_vertex_names();
            colouring = paper_colouring(a.figure);
        }
    } else {
        if (a.graph.empty()) throw UsageError("give --graph or --figure");
        g = graph_from_json(read_json(a.graph));
    }
    if (!a.colouring.empty()) {
        colouring = colouring_from_json(read_json(a.colouring));
    }
    write_text(a.out, export_dot(g, colouring ? &*colouring : nullptr, names));
    return exit_ok;
}

struct VerifyArgs {
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = default_seed;
    std::string report;
    std::string witness_dir;
    std::vector<std::string> claims;
    bool no_timing = false;
    bool list = false;
};

int run_verify(const VerifyArgs& a) {
    if (a.list) {
        for (const auto& c : claim_catalogue()) std::cout << c.id << "  " << c.description << '\n';
        return exit_ok;
    }
    VerifyOptions options;
    options.budget = resolve_budget(a.budget);
    options.seed = a.seed;
    options.only = a.claims;
    if (!a.witness_dir.empty()) options.witness_dir = a.witness_dir;
    std::cout << "seed: " << options.seed << ", budget: " << options.budget << '\n';
    const auto report = verify_paper(options);
    std::cout << report.to_text();
    if (!a.report.empty()) write_json(a.report, report.to_json(!a.no_timing));
    if (report.any_failed()) return exit_none;
    if (!report.all_passed()) return exit_inconclusive;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal colourings and independent coverings"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit a graph (and partition) as JSON");
    gen_cmd->add_option("family", gen.family,
                        "figure1 | G1 | G2 | G3 | double-star | subdivided-double-star | nkk | tree | degenerate | "
                        "random | rook | empty | colouring")
        ->required();
    gen_cmd->add_option("--m", gen.m, "double star size (even)");
    gen_cmd->add_option("--n", gen.n, "vertex count, or side length for rook / subdivided-double-star");
    gen_cmd->add_option("--parts", gen.parts, "number of classes");
    gen_cmd->add_option("--size", gen.size, "class size");
    gen_cmd->add_option("--matching", gen.matching, "matching size between classes");
    gen_cmd->add_option("--cap", gen.cap, "maximum degree cap");
    gen_cmd->add_option("--d", gen.d, "earlier neighbours per vertex");
    gen_cmd->add_option("--p", gen.p, "edge probability");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--name", gen.name, "figure colouring name: G1 | G2 | G3 | D14");
    gen_cmd->add_option("--out", gen.out, "output path, - for stdout");
    gen_cmd->add_option("--partition-out", gen.partition_out, "write the partition here");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Validate a colouring or covering");
    check_cmd->add_option("--graph", check.graph)->required();
    check_cmd->add_option("--colouring", check.colouring);
    check_cmd->add_option("--covering", check.covering);
    check_cmd->add_option("--partition", check.partition);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Exact search");
    solve_cmd->require_subcommand(1);
    auto* solve_ochi = solve_cmd->add_subcommand("ochi", "orthogonal chromatic number");
    auto* solve_colour = solve_cmd->add_subcommand("colour", "orthogonal colouring with a fixed colour count");
    auto* solve_cover = solve_cmd->add_subcommand("cover", "independent covering w.r.t. a partition");
    for (auto* sub : {solve_ochi, solve_colour, solve_cover}) {
        sub->add_option("--graph", solve.graph)->required();
        sub->add_option("--budget", solve.budget, "search node limit");
        sub->add_option("--out", solve.out, "witness path, - for stdout");
    }
    solve_colour->add_option("--colours", solve.colours)->required();
    solve_cover->add_option("--partition", solve.partition)->required();

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "Polynomial-time constructions");
    construct_cmd->require_subcommand(1);
    auto* c_hall = construct_cmd->add_subcommand("hall", "covering of an [n,k,k]-partite graph, n <= ceil(k/2)");
    c_hall->add_option("--graph", construct.graph)->required();
    c_hall->add_option("--partition", construct.partition)->required();
    c_hall->add_option("--covering-out", construct.covering_out);
    auto* c_star = construct_cmd->add_subcommand("double-star", "colouring of D_m with ceil(sqrt m) colours");
    c_star->add_option("--m", construct.m)->required();
    auto* c_degen = construct_cmd->add_subcommand("degenerate", "degenerate swap colouring");
    c_degen->add_option("--graph", construct.graph)->required();
    c_degen->add_flag("--force", construct.force, "run even if the degree bound fails");
    for (auto* sub : {c_hall, c_star, c_degen}) {
        sub->add_option("--out", construct.out, "colouring path, - for stdout");
    }

    DotArgs dot;
    auto* dot_cmd = app.add_subcommand("export-dot", "Render a graph as DOT");
    dot_cmd->add_option("--graph", dot.graph);
    dot_cmd->add_option("--colouring", dot.colouring);
    dot_cmd->add_option("--figure", dot.figure, "figure1 | G1 | G2 | G3 | D14");
    dot_cmd->add_option("--out", dot.out);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Re-run every claim and report");
    verify_cmd->add_option("--budget", verify.budget, "search node limit per search");
    verify_cmd->add_option("--seed", verify.seed, "base seed for random instances");
    verify_cmd->add_option("--report", verify.report, "JSON report path");
    verify_cmd->add_option("--witness-dir", verify.witness_dir, "directory for witness files");
    verify_cmd->add_option("--claim", verify.claims, "only run these claim ids");
    verify_cmd->add_flag("--no-timing", verify.no_timing, "omit elapsed times from the JSON report");
    verify_cmd->add_flag("--list", verify.list, "list claim ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*check_cmd) return run_check(check);
        if (*solve_cmd) {
            return run_solve(*solve_ochi ? "ochi" : *solve_colour ? "colour" : "cover", solve);
        }
        if (*construct_cmd) {
            return run_construct(*c_hall ? "hall" : *c_star ? "double-star" : "degenerate", construct);
        }
        if (*dot_cmd) return run_export_dot(dot);
        if (*verify_cmd) return run_verify(verify);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return exit_none;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_none;
    }
    return exit_usage;
}
