#ifndef MH_CLI_HPP
#define MH_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "mh/config.hpp"

namespace mh {

struct RunOptions {
    std::optional<i64> modulus;
    std::optional<std::vector<std::string>> samples;
    std::optional<int> cap;  // kappa dimension cap
};

struct CommandResult {
    Json report;
    bool ok = false;  // every requested verification passed
};

// classify | cohomology | gal | bigal | verify | predict
CommandResult run_command(const std::string& command, const RunConfig& cfg, const RunOptions& opt);
// every *.json under dir, in name order, checked against its "expect" block
CommandResult run_examples(const std::string& dir, const RunOptions& opt);

std::string render_text(const Json& report);

}  // namespace mh

#endif
