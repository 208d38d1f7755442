#pragma once

// Command dispatcher behind the `qhopf` executable. Kept in the library so the
// commands can be driven in-process by tests.

#include <string>
#include <vector>

namespace qhopf {

struct CliResult {
    int exit_code = 0;  // 0 ok, 1 a check failed, 2 usage or input error
    std::string out;
    std::string err;
};

/// `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace qhopf
