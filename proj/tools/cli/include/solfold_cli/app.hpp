#pragma once

#include <ostream>

namespace solfold::cli {

// Entry point of the solfold executable:
//   solfold <verify|export|report> [subcommand] [flags]
// Exit status: 0 success, 1 failed checks or runtime failure, 2 invalid
// configuration or unwritable output. Failures print one JSON error record on `err`.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace solfold::cli
