#pragma once

#include <iosfwd>

namespace otto {

/// Entry point of the `otto` tool. Exit codes: 0 ok, 1 bad configuration or
/// out-of-range input, 2 numerical failure, 3 selftest failure, 4 I/O error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace otto
