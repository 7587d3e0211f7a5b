#include <iostream>
#include <vector>

#include "nilform/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = nilform::run_cli(args);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
