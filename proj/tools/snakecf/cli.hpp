#pragma once

#include <string>
#include <vector>

namespace snakecf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
    int exit_code = kExitOk;
    std::string payload;  // JSON document, ascii art or svg
    bool written_to_file = false;
};

/// Parses and executes one invocation; args excludes the program name.
/// Never throws and never touches stdout.
CommandResult run(const std::vector<std::string>& args);

}  // namespace snakecf::cli
