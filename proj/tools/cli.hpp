#pragma once

namespace bernbound::cli {

// Parses argv and runs one subcommand. Returns the process exit code:
// 0 success / all checks pass; 1 check failure or regime violation;
// 2 usage error; 3 inconclusive verdicts under --strict.
int run(int argc, char** argv);

}  // namespace bernbound::cli
