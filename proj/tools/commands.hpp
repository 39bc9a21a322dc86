#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cap::cli {

enum Exit { kOk = 0, kVerifyFailed = 2, kBudget = 3, kInputError = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cap::cli
