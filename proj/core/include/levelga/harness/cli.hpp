#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levelga::harness {

/// Full command-line front end. `args` excludes the program name. Returns
/// the process exit code: 0 success, 1 usage error, 2 runtime failure,
/// 3 assertion violation (scale --assert-slope).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levelga::harness
