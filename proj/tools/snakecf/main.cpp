#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const snakecf::cli::CommandResult result = snakecf::cli::run(args);
    if (!result.written_to_file) {
        (result.exit_code == snakecf::cli::kExitOk ? std::cout : std::cerr) << result.payload;
    }
    return result.exit_code;
}
