#pragma once

namespace vclab {

// Full command-line entry point (argument parsing, dispatch, exit-code
// mapping: 0 success, 1 usage error, 2 instance too large, 3 verification
// failure).  The binary's main() forwards here.
int cli_main(int argc, const char* const* argv);

}  // namespace vclab
