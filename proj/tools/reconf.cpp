#include "reconf/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace reconf::cli;

int main(int argc, char** argv)
{
    CLI::App app{"reconf: reconfiguration reductions, solvers and checkers"};
    app.require_subcommand(1);

    CommandOptions options;
    std::optional<std::size_t> max_states, max_depth;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-states", max_states, "state cap for searches");
        cmd->add_option("--max-depth", max_depth, "depth cap for searches");
        cmd->add_option("--seed", options.seed, "random seed");
        cmd->add_option("--out", options.out, "output file (default stdout)");
    };

    std::string input_path, instance_path, sequence_path, pair;
    std::optional<std::string> machine_path;

    auto* compile = app.add_subcommand("compile", "lower a machine, rewriting system or H-word instance");
    compile->add_option("file", input_path, "machine, rewriting system or instance file")->required();
    compile->add_option("--stage", options.stage,
                        "target: srs, split, hword, shortest-path, max-is, list-coloring, k-coloring");
    compile->add_option("--space", options.space, "encoding length for machines (default |x|+2)");
    compile->add_option("--input", options.input, "machine input word (space separated symbols)");
    compile->add_option("--word-a", options.word_a, "first word of a rewriting instance");
    compile->add_option("--word-b", options.word_b, "second word of a rewriting instance");
    compile->add_option("--max-vertices", options.max_vertices, "refuse larger compiled graphs");
    add_common(compile);

    auto* solve = app.add_subcommand("solve", "decide reachability and print a sequence");
    solve->add_option("instance", instance_path, "instance file")->required();
    add_common(solve);

    auto* verify = app.add_subcommand("verify", "check a sequence against an instance");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("sequence", sequence_path, "sequence file")->required();

    auto* check = app.add_subcommand("check-equivalence", "compare both sides of a reduction on small instances");
    check->add_option("pair", pair, "machine-srs, split, srs-hword, shortest-path, max-is, list-coloring, list-plain, cycle, "
                                    "tree or treedepth")
        ->required();
    check->add_option("--max-symbols", options.equivalence.max_symbols, "alphabet or |V(H)| bound");
    check->add_option("--max-length", options.equivalence.max_length, "word length or graph size bound");
    check->add_option("--samples", options.equivalence.samples, "cases kept from large families");
    add_common(check);

    auto* treedepth = app.add_subcommand("treedepth", "exact treedepth and an elimination forest");
    treedepth->add_option("graph", input_path, "graph or digraph file")->required();
    treedepth->add_option("--max-vertices", options.treedepth_limit, "vertex limit of the exact search");
    add_common(treedepth);

    auto* demo = app.add_subcommand("demo-tm", "run a machine and its rewriting simulation");
    demo->add_option("machine", machine_path, "machine file (default: built-in example)");
    demo->add_option("--input", options.input, "input word (space separated symbols)");
    demo->add_option("--space", options.space, "encoding length (default |x|+2)");
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }
    if (max_states)
        options.limits.max_states = *max_states;
    if (max_depth)
        options.limits.max_depth = *max_depth;

    auto result = run_guarded([&]() -> CommandResult {
        if (*compile)
            return cmd_compile(input_path, options);
        if (*solve)
            return cmd_solve(instance_path, options);
        if (*verify)
            return cmd_verify(instance_path, sequence_path);
        if (*check)
            return cmd_check_equivalence(pair, options);
        if (*treedepth)
            return cmd_treedepth(input_path, options);
        return cmd_demo_tm(machine_path, options);
    });
    std::cout << result.output;
    std::cerr << result.error;
    return result.exit_code;
}
