#include "mp/cli.hpp"
namespace mp { int run_cli(const std::vector<std::string>&, std::string&, std::string&) { return 2; } }
