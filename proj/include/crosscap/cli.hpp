#pragma once

#include <ostream>

namespace crosscap {

/// Exit codes: 0 success, 1 input error, 2 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crosscap
