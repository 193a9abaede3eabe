#pragma once

#include <string>
#include <vector>

namespace rachaos::cli {

// Exit codes: 0 success, 1 I/O or data error, 2 usage error, 3 decrypt
// completed but the recovered image does not match the key digest.
int run(int argc, const char* const* argv);

// Convenience for tests; args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace rachaos::cli
