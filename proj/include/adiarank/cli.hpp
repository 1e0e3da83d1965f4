#pragma once

namespace adiarank {

// Full command-line front end; returns the process exit code
// (0 ok, 2 usage, 3 numerical failure, 4 I/O).
int run_cli(int argc, const char* const* argv);

}  // namespace adiarank
