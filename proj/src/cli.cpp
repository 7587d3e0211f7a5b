#include "nilform/cli.hpp"
namespace nilform {
CliResult run_cli(const std::vector<std::string>&) { return {2, "", "not implemented\n"}; }
}
