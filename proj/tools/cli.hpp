#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsaw::cli {

// Exit codes: 0 ok, 2 usage, 3 invariant or acceptance failure, 4 resource
// budget exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hsaw::cli
