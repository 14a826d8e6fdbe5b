#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace scatspec::cli {

// Exit codes: 0 ok, 1 usage error, 2 domain error, 3 guard violation.
struct CommandResult {
    int exit_code = 0;
    nlohmann::ordered_json body;

    std::string dump() const { return body.dump(2); }
};

// Runs one command. argv excludes the program name. Deterministic: the same
// argv always produces byte-identical output.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace scatspec::cli
