#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigeom {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_budget = 3 };

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "123+345-2*567": 1-based single-digit index triples with an optional sign
// and integer coefficient.
class TriForm;
class FieldSpec;
TriForm parse_terms(const std::string& text, int n, const FieldSpec& field);

}  // namespace trigeom
