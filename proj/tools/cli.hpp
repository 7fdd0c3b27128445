#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpsw::cli {

// Exit codes: 0 success or all checks confirmed, 1 some check refuted,
// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpsw::cli
