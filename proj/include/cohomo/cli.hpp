#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohomo::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kCertificateFailure = 1, ///< certificate or validation failed
    kConfigError = 2,        ///< parse or configuration error
    kNumericalFailure = 3,   ///< iteration cap, bracket or quadrature failure, domain error
};

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out` (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cohomo::cli
