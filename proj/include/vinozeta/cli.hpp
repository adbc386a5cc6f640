// Command-line front end. Results go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#pragma once

#include <iosfwd>

namespace vinozeta::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vinozeta::cli
