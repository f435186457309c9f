#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace f2coh {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitVerification = 3;

inline constexpr const char* kJsonVersion = "1";

// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2coh
