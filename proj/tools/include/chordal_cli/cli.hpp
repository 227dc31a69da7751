#ifndef CHORDAL_CLI_HPP
#define CHORDAL_CLI_HPP

#include <ostream>

namespace chordal {

// Full command-line driver; returns the process exit code.
// 0 success, 1 verification mismatch, 2 usage or input error, 3 resource cap.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chordal

#endif
