#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aeslab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kCryptoFailure = 2;
inline constexpr int kIoFailure = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aeslab::cli
