#pragma once

#include <ostream>

namespace colorgates::cli {

// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace colorgates::cli
