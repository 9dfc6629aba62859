#pragma once

#include <iosfwd>

namespace reglab::cli {

// 0 success, 1 malformed input, 2 contract or verification failure,
// 3 capacity exceeded
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reglab::cli
