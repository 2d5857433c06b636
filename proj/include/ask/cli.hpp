#pragma once

#include <string>

#include "json.hpp"

namespace ask::cli {

// Executes one subcommand against its JSON config. Overrides hold
// flag-level settings (threads, geodesic tau/eta/depth). Returns the
// process exit status: 0 ok, 2 config error, 3 numerical failure.
int run_subcommand(const std::string& name, const nlohmann::json& config,
                   const nlohmann::json& overrides = nlohmann::json::object());

// Full argv entry point used by the binary.
int run(int argc, char** argv);

}  // namespace ask::cli
