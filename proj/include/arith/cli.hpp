// Command-line front end. Kept in a library so tests drive it in-process.

#ifndef ARITH_CLI_HPP_
#define ARITH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace arith {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // well-formed request on a bad value
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace arith

#endif  // ARITH_CLI_HPP_
