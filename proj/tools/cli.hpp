#ifndef SIG4_TOOLS_CLI_HPP
#define SIG4_TOOLS_CLI_HPP

#include <sig4/numeric.hpp>
#include <sig4/weierstrass.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace sig4::cli
{

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_tolerance = 1;
inline constexpr int exit_usage = 2;

// Parse a point such as "0.3", "-1.2+0.4i", "K", "K+iK'", "0.5K-0.25iK'".
// K and K' resolve through `halves`. Throws DomainError on malformed input.
CPoint parse_point(const std::string &text, const PeriodPair &halves);

// Run the tool with args excluding the program name. Output goes to `out`,
// diagnostics and summaries to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sig4::cli

#endif
