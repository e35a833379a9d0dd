#ifndef MMQ_CLI_HPP
#define MMQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mmq::cli {

// Runs the command-line front end. args excludes the program name.
// Exit codes: 0 success (and all verifications passing), 1 verification
// failure, 2 input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace mmq::cli

#endif
