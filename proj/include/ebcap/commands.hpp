#pragma once

#include <cstdint>
#include <string>

namespace ebcap {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotBreaking = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitIoFailure = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitUnsupportedDim = 5;
inline constexpr int kExitPropertyFailure = 6;

int cmd_depol_region(double eps, int grid_size, const std::string& out);
int cmd_td_region(double eps, int grid_size, const std::string& out);
int cmd_sweep(const std::string& channel_file, const std::string& config_file,
              const std::string& out);
int cmd_check_eb(const std::string& channel_file);
int cmd_verify(const std::string& suite, std::uint64_t seed, int trials);
int cmd_report(double eps, const std::string& out_dir);

}  // namespace ebcap
