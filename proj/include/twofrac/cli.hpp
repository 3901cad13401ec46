#pragma once

// Command-line entry point. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 resource error.

namespace twofrac {

int dispatch(int argc, const char* const* argv);

}  // namespace twofrac
