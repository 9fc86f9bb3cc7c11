#ifndef UNICELL_CLI_HPP
#define UNICELL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace unicell::cli {

/* Full command-line front end, stream-parameterized so tests can drive it.
   args excludes the program name. Exit codes: 0 success, 1 domain error
   (message on err), 2 usage error. */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace unicell::cli

#endif
