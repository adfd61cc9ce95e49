#pragma once

#include "reconf/cli/equivalence.hpp"
#include "reconf/engine.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace reconf::cli {

inline constexpr int exit_success = 0;
inline constexpr int exit_unreachable = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_resource = 3;

struct CommandOptions {
    std::string stage = "hword";         // compile target
    std::optional<std::size_t> space;    // tape space for machines
    SearchLimits limits;
    std::uint64_t seed = 1;
    std::string out;                     // output file; empty means stdout
    std::optional<std::string> input;    // machine input word
    std::optional<std::string> word_a;   // rewriting endpoints
    std::optional<std::string> word_b;
    std::size_t max_vertices = 200'000;  // guard for compiled graphs
    std::size_t treedepth_limit = 20;
    EquivalenceOptions equivalence;
};

struct CommandResult {
    int exit_code = exit_success;
    std::string output; // stdout text
    std::string error;  // stderr text
};

/// Lowers a machine, rewriting system or instance file to the stage in
/// options.stage and writes the instance plus `<out>.manifest.json`.
CommandResult cmd_compile(const std::string& input_path, const CommandOptions& options);
CommandResult cmd_solve(const std::string& instance_path, const CommandOptions& options);
CommandResult cmd_verify(const std::string& instance_path, const std::string& sequence_path);
CommandResult cmd_check_equivalence(const std::string& pair, const CommandOptions& options);
CommandResult cmd_treedepth(const std::string& graph_path, const CommandOptions& options);
/// Runs a machine (built-in when no path is given) and its rewriting simulation.
CommandResult cmd_demo_tm(const std::optional<std::string>& machine_path, const CommandOptions& options);

/// Runs a command, mapping library errors to exit codes 2 and 3.
CommandResult run_guarded(const std::function<CommandResult()>& command);

/// Text of the built-in demonstration machine.
const std::string& demo_machine_text();

} // namespace reconf::cli
