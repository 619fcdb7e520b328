#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sszeta::cli {

/// Exit status: 0 ok, 1 usage error, 2 domain error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sszeta::cli
