#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcfrft/analysis.hpp"
#include "qcfrft/verify.hpp"

namespace qcfrft {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Runs one subcommand. `args` excludes the program name, e.g.
/// {"verify", "--suite", "parseval", "--size", "6"}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const ResidualRecord& r);
nlohmann::json to_json(const VerifyReport& r);

}  // namespace qcfrft
