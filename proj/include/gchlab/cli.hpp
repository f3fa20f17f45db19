/// \file cli.hpp
/// Batch front-end. Exit codes: 0 completed / verdict produced,
/// 2 wave breaking detected, 3 numerical failure or step-floor stop,
/// 4 configuration or usage error.

#pragma once

#include <string>
#include <vector>

namespace gchlab::cli {

/// Runs one subcommand (args exclude the program name).
int dispatch(const std::vector<std::string>& args);

} // namespace gchlab::cli
