#pragma once

// Subcommands of the `tvsc` tool. Each returns the process exit code:
// 0 on success, 1 on validation errors, 2 on runtime failures.

#include <string>
#include <vector>

namespace tvsc::cli {

int run(int argc, const char* const* argv);

/// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args);

}  // namespace tvsc::cli
