#pragma once

namespace snse {

/// Entry point of the snse tool.  Subcommands: simulate, verify, ou-moments,
/// uniqueness, convergence, tightness.  Returns 0 on success, 1 on a
/// validation/usage failure, 2 on a numerical abort (partial diagnostics are
/// flushed first).
int cli_main(int argc, const char* const* argv);

}  // namespace snse
