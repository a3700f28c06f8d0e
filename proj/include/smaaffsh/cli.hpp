#pragma once

#include <iosfwd>

namespace smaaffsh {

/// Entry point of the smaa-ffs-h command. Returns the process exit status:
/// 0 success, 1 validation or domain error, 2 I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smaaffsh
