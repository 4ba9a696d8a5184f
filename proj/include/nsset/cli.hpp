#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;     // parse / validation failure
inline constexpr int kExitDomainMismatch = 2;
inline constexpr int kExitInternalError = 3;  // invariant violation; never expected

/// Entry point behind main(). Subcommands: validate, op, decide,
/// group-decide. Deterministic: the same arguments and input files produce
/// identical bytes on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsset::cli
