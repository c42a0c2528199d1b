#ifndef STATSEQ_CLI_HPP
#define STATSEQ_CLI_HPP

#include <iosfwd>

namespace statseq::cli {

/// Run the command line tool. Exit status: 0 for success or a positive
/// answer, 1 for a well-formed negative answer (not realizable, not unique,
/// check failed), 2 for malformed input or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace statseq::cli

#endif  // STATSEQ_CLI_HPP
