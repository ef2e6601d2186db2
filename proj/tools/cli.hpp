#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jslat::cli {

// Exit codes: 0 success, 1 verification failures, 2 validation errors,
// 3 parse errors, 4 size-guard refusals.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace jslat::cli
