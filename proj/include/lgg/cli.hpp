#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgg {

/// Command dispatch for the lgg tool. Returns the process exit code:
/// 0 success, 1 negative decision (invalid LGG, failed dilation decision),
/// 2 usage or input errors. Result documents go to `out`, diagnostics to
/// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgg
