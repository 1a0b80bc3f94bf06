#pragma once

#include <iosfwd>

namespace eptas::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 no schedule exists,
/// 3 node or configuration budget exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eptas::cli
