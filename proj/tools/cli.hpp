#pragma once

#include <iosfwd>

namespace lcsgc::cli {

/// Entry point of the `lcsgc` tool with injectable streams. Returns 0 on
/// success and 2 on any input error; errors are reported as
/// {"error": {"code": ..., "message": ...}}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcsgc::cli
