#ifndef HANS_CLI_HPP
#define HANS_CLI_HPP

namespace hans {

/// Command-line front end. Exit codes: 0 success, 1 parse error,
/// 2 validation or precondition error, 3 verification failure.
int cli_main(int argc, const char* const* argv);

}  // namespace hans

#endif
