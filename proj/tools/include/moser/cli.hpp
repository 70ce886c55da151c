#pragma once

// The `moser` command line, as a library so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace moser::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2 };

/// Runs one command. `args` excludes the program name. Results go to the
/// --out file when given, else to `out`; the run manifest goes to
/// "<out>.manifest.json", else to `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reals written as "2.5", "pi", "4pi" or "3.9*pi".
double parse_real(const std::string& text);
/// Comma-separated parse_real values.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace moser::cli
