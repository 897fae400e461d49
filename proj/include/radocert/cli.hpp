#ifndef RADOCERT_CLI_HPP
#define RADOCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace radocert::cli {

inline constexpr int kExitDefinitive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radocert::cli

#endif
