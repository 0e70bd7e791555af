#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dorroh::cli {

/// Exit codes: 0 every checked condition holds, 1 some condition fails,
/// 2 usage, parse or budget error.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Runs one command; args exclude the program name. Input documents are read
/// from the named file, or from `in` when the file is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dorroh::cli
