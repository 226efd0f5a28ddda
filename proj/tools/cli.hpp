#pragma once

#include <iosfwd>

namespace singres {

// Full command line (argv[0] included). Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singres
