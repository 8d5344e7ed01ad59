#pragma once

#include <iosfwd>

namespace frb {

/// Exit codes: 0 success, 1 reproduction mismatch or unsound bound,
/// 2 usage or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace frb
