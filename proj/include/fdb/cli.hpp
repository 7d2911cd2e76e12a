#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fdb/limits.hpp"

namespace fdb::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_guard_exceeded = 3;
inline constexpr int exit_mismatch = 4;

/// Runs one fdb invocation. args excludes the program name. Output goes to
/// out, diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Limits& limits = Limits::from_environment());

} // namespace fdb::cli
