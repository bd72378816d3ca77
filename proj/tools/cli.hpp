#pragma once

#include <ostream>

namespace affkm {

enum ExitCode : int { kPass = 0, kVerifyFailed = 1, kParseError = 2, kUnsupported = 3 };

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace affkm
