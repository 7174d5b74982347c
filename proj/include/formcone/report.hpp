#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formcone/session.hpp"
#include "json.hpp"

namespace formcone {

enum class Command { gb, formring, hilbert, dim, depth, lzero, grade, cm_check, full_report, emit_cas };

const std::vector<std::string>& command_names();
std::optional<Command> parse_command(std::string_view name);

struct CommandReport {
  // Keys: command, data, verdict, depth, dim, grade, sop, lzero_table, band,
  // certificates, timings, parameters (in this order).
  nlohmann::ordered_json json;
  std::string text;
};

// Runs one command. emit-cas is not a report command; use emit_cas_script.
CommandReport run_command(Command cmd, const SessionSpec& spec);

// Script for an external computer-algebra system recomputing the form ring,
// its dimension and depth. Dialects: "macaulay2", "singular". Throws
// InputError for constructs the dialect cannot express.
std::string emit_cas_script(const SessionSpec& spec, std::string_view dialect);

// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_input = 2,
  exit_budget = 3,
  exit_internal = 4,
  exit_math = 5,
};

}  // namespace formcone
