// formcone <command> <file> [--json] [--set key=value ...]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "formcone/errors.hpp"
#include "formcone/report.hpp"

using namespace formcone;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string defaults_help() {
  SessionParams p;
  std::ostringstream s;
  s << "Parameters (set in the file with `set key = value` or with --set key=value):\n"
    << "  n_max=" << p.n_max << "  largest n scanned for the index-0 modules\n"
    << "  l_max=" << p.l_max << "  largest exponent l in the colon chain\n"
    << "  window=" << p.window << "  consecutive equal colons that count as stable\n"
    << "  degree_cap=" << p.degree_cap << "  degree bound for truncated cross-checks\n"
    << "  probe_cap=" << p.probe_cap << "  largest power of q probed for initial degrees\n"
    << "  search_random=" << p.search_random << "  random combinations tried per degree\n"
    << "  search_extra_degree=" << p.search_extra_degree
    << "  extra degrees searched for a regular form\n"
    << "  max_reductions=" << p.max_reductions << "  reduction-step budget per Groebner basis\n"
    << "Exit codes: 0 ok, 1 usage, 2 input error, 3 budget exhausted, 4 internal error, 5 "
       "mathematical precondition failed.\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Form rings, index-0 local cohomology variation and Cohen-Macaulay checks"};
  std::string command, file, dialect = "macaulay2";
  bool as_json = false;
  std::vector<std::string> sets;
  std::string commands;
  for (const auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("file", file, "Session file ('-' reads standard input)")->required();
  app.add_flag("--json", as_json, "Print the JSON report instead of text");
  app.add_option("--set", sets, "Override a parameter: key=value")->take_all();
  app.add_option("--dialect", dialect, "emit-cas target: macaulay2 or singular");
  app.footer(defaults_help());
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  auto cmd = parse_command(command);
  if (!cmd) {
    std::cerr << "error: unknown command '" << command << "' (expected one of: " << commands << ")\n";
    return exit_usage;
  }
  try {
    SessionSpec spec = parse_session(read_input(file), false);
    for (const auto& kv : sets) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--set expects key=value, got '" + kv + "'");
      set_parameter(spec.params, kv.substr(0, eq), kv.substr(eq + 1));
    }
    build_context(spec);
    if (*cmd == Command::emit_cas) {
      std::cout << emit_cas_script(spec, dialect);
      return exit_ok;
    }
    auto rep = run_command(*cmd, spec);
    if (as_json)
      std::cout << rep.json.dump(2) << "\n";
    else
      std::cout << rep.text;
    return exit_ok;
  } catch (const InputError& e) {
    std::cerr << file << ": input error: " << e.what() << "\n";
    return exit_input;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return exit_budget;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const MathError& e) {
    std::cerr << "mathematical error: " << e.what() << "\n";
    return exit_math;
  }
}
