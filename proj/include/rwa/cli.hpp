#ifndef RWA_CLI_HPP
#define RWA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rwa::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1; // negative verdict under --assert, or failed verification
inline constexpr int kBadInput = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rwa::cli

#endif // RWA_CLI_HPP
