#pragma once

namespace aode::cli {

/// Parses argv and dispatches to one of the subcommands (solve,
/// vanishing-order, inspect, verify). Returns the process exit code:
/// 0 success, 1 usage or parse error, 2 non-extendable tuple or failed
/// verification, 3 internal invariant violation.
int run(int argc, char** argv);

}  // namespace aode::cli
