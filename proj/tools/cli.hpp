#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bvkit::cli {

// 0: success and every verdict holds; 1: a check failed (counterexample in the
// report); 2: bad flags, unreadable files or malformed input.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvkit::cli
