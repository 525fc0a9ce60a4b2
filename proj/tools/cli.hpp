#pragma once

#include <string>
#include <vector>

namespace burgeon::cli {

/// Runs the burgeon command line. Exit code contract: 0 all checks passed,
/// 1 a check failed or a run aborted, 2 usage/config error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace burgeon::cli
