#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperarr::cli {

// Full command-line driver as a library call so tests can run it in-process:
// `args` excludes the program name; all normal output goes to `out`,
// diagnostics to `err`. Returns the process exit code: 0 success, 1 negative
// domain result (e.g. non-generic input where genericity is required),
// 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hyperarr::cli
