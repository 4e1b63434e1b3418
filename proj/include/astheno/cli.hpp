#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace astheno::cli {

// Exit codes: 0 zero verdict / all matched / all invariants pass,
// 1 nonzero verdict / diff / failed invariant, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNonzero = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace astheno::cli
