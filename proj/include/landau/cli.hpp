#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landau {

inline constexpr const char* kSchemaVersion = "1";

// Runs one command. args excludes the program name. JSON or CSV goes to out,
// diagnostics to err. Returns 0 on success or a positive verification, 1 on a
// negative verification or solver failure, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landau
