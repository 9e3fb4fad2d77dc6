#pragma once

#include <string>
#include <vector>

namespace locsol::cli {

// Exit codes: 0 success, 2 usage error, 3 resource/checkpoint error.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace locsol::cli
