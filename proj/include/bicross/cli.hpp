#pragma once

#include <string>
#include <vector>

namespace bicross {

/// The command-line driver behind the bicross binary. Exit codes: 0 success,
/// 1 verification failure, 2 usage or input error.
int cli_main(std::vector<std::string> args);

} // namespace bicross
