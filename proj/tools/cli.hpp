#pragma once

#include <iosfwd>

namespace secb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

inline constexpr const char* kVersion = "0.1.0";

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace secb::cli
