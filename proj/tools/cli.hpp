#pragma once

#include <iosfwd>

namespace nblab::cli {

/// Runs the command line; returns the process exit code. 0 on success, 2 on
/// invalid input, 3 when the computation itself fails. Errors are reported
/// on `err` as one line "error kind=<Kind> exit=<code> message=<text>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nblab::cli
