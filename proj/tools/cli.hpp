#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uberhom::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kSizeGuard = 3,
    kInternalError = 4,
};

/// Runs one command line; `args` excludes the program name. Input "-" reads `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace uberhom::cli
