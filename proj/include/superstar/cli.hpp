#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "superstar/polynomial.hpp"
#include "superstar/symplectic_linear.hpp"

namespace superstar::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kMathError = 2,
  kInvariantFailure = 3,
};

// "n,a,b" with an optional "+,-,..." epsilon layout.
Signature parse_signature(std::string_view sig_text, std::string_view eps_text, int aux);

// Matrix description: {"A": [[rat]], "B": [[expr]], "C": [[expr]], "D": [[rat-or-expr]]}.
// Entries may be JSON integers or strings in the expression grammar.
SuperMatrix parse_matrix_json(std::string_view json_text, const SignaturePtr& sig);

// Executes one subcommand; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

CommandResult run_command(const std::vector<std::string>& args);

}  // namespace superstar::cli
