#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigraph::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;  ///< an identity failed or routes disagreed
inline constexpr int kInputError = 2;          ///< bad input, bad flags, or a cap was hit

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bigraph::cli
