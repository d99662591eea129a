#ifndef GERMKIT_CLI_HPP
#define GERMKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace germkit::cli {

/* exit codes */
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_invariant = 2;

/* Runs one command line (without the program name). Results go to out
 * unless --out redirects them; diagnostics go to err.
 */
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace germkit::cli

#endif
