#pragma once

#include <iosfwd>

namespace gbei::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the gbei tool. Subcommands: analyze, circulant, classify,
/// gen. The report goes to out, diagnostics to err. Returns 0 on success,
/// 1 on domain errors (disconnected input, bad parameters, unreadable
/// files) and 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gbei::cli
