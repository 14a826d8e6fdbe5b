#include <iostream>
#include <string>
#include <vector>

#include "scatspec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    scatspec::cli::CommandResult result = scatspec::cli::run(args);
    std::cout << result.dump() << "\n";
    return result.exit_code;
}
