#pragma once

#include <ostream>

namespace kottman::cli {

/// Runs one command line. Exit codes: 0 ok/verified, 2 falsified or failed
/// self-test, 3 budget exceeded, 4 usage or precondition error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kottman::cli
