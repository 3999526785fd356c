#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ppgf::cli {

// runs one command; returns 0 on success, 1 on a computation failure and
// 2 on a usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace ppgf::cli
