#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twistderiv::cli {

enum exit_code : int {
    ok = 0,
    tolerance_breach = 1,
    input_error = 2,
    numeric_error = 3,
};

enum class Command { derive, check, table, formula };
enum class OutputFormat { text, structured };

// Parsed command line for one invocation.
struct RunSpec {
    Command command = Command::derive;
    std::string input;
    unsigned order = 0;
    OutputFormat format = OutputFormat::text;
    double tolerance = 1e-9;
    double fd_tolerance = 1e-4;
    double fd_step = 1e-3;
    std::size_t n = 0;
    bool latex = false;
};

int cmd_derive(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_check(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_table(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_formula(const RunSpec& spec, std::ostream& out, std::ostream& err);

// Full front end: args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twistderiv::cli
