#pragma once

namespace openchi {

// Entry point for the command-line tool. Exit codes: 0 when a verdict was
// reached, 2 on domain errors, 3 on unreadable or malformed input.
int run_cli(int argc, char** argv);

}  // namespace openchi
