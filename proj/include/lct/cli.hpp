#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lct::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification_failed = 2;

/// Subcommand dispatch. Machine output goes to `out`, diagnostics to `err`;
/// `--input -` reads `in`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

} // namespace lct::cli
