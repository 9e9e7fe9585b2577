#pragma once

#include <string>
#include <vector>

namespace xfam::cli {

// Entry point behind the `xfam` binary. Returns 0 on success / clean
// verification, 1 on violations or refuted certificates, 2 on usage errors.
int run(const std::vector<std::string>& args);

}  // namespace xfam::cli
