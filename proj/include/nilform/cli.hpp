#pragma once

#include <string>
#include <vector>

namespace nilform {

struct CliResult {
    int exit_code = 0;  // 0 pass, 1 negative verification, 2 usage/parse error
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace nilform
