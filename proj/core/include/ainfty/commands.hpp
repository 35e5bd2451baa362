#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ainfty/instance_io.hpp"

namespace ainfty {

// Exit codes: 0 success, 1 the requested check or lift failed mathematically,
// 2 malformed input or unusable parameters. The report is JSON on every path
// and is byte-deterministic for fixed inputs and parameters.
struct CommandResult {
  int exit_code = 0;
  std::string report;                       // newline-terminated JSON
  std::optional<std::string> instance_out;  // canonical instance, when one is produced
};

CommandResult cmd_validate(const std::string& instance_text);
CommandResult cmd_homology(const std::string& instance_text);
CommandResult cmd_check_prelie(const std::string& instance_text, int trials,
                               std::uint64_t seed);
CommandResult cmd_check_ar(const std::string& instance_text, std::optional<int> up_to);
CommandResult cmd_hochschild(const std::string& instance_text, int n, int i);
CommandResult cmd_obstruct(const std::string& instance_text, std::optional<int> level);
CommandResult cmd_extend(const std::string& instance_text, int to);
CommandResult cmd_convert(const std::string& instance_text, const std::string& to);

}  // namespace ainfty
