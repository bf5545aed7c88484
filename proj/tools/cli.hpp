#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coword {

// Exit codes: 0 on success or membership, 1 for no-at-budget or a failed law, 2 when the input is rejected.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coword
