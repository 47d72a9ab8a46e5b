#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orlicz::cli {

// Exit codes: 0 success, 1 usage/domain/validation error, 2 refuted check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orlicz::cli
