#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hrum::cli {

enum ExitCode : int {
    kOk = 0,
    kPropertyAbsent = 1,
    kInputError = 2,
    kSizeGuard = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; an input path of `-` reads from `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hrum::cli
