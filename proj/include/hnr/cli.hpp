#ifndef HNR_CLI_HPP
#define HNR_CLI_HPP

#include <ostream>

namespace hnr {

/// Command-line entry point. Exit codes: 0 success, 1 failed
/// verification or a non-symmetrizing trace, 2 usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hnr

#endif  // HNR_CLI_HPP
