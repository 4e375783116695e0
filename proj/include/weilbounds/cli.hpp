#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace weilbounds {

/// Renders the human-readable table for a machine report. The table output
/// of every command is exactly render_table(<its JSON report>), so emitted
/// JSON re-renders byte-identically.
std::string render_table(const nlohmann::ordered_json& report);

/// Runs one CLI invocation (args exclude the program name).
/// Exit code 0: success and no non-conjectural FAIL verdict;
/// 1: at least one non-conjectural FAIL or failed exact identity;
/// 2: usage, schema, or computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace weilbounds
