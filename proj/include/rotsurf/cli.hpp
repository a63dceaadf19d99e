#pragma once

#include <iosfwd>

namespace rotsurf {

/// Entry point of the `rotsurf` tool: generate, verify and solve-meridian
/// subcommands. Returns the process exit code (verify: 0 pass, 1 fail;
/// 2 on usage or numerical errors).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rotsurf
