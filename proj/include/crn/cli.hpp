#ifndef CRN_CLI_HPP
#define CRN_CLI_HPP

#include "crn/square.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace crn::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error,
/// 2 input parse error (reported with line number), 3 domain error.
/// Errors go to err, results to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json classification_to_json(const Classification& classification);
Classification classification_from_json(const nlohmann::json& j);

}  // namespace crn::cli

#endif  // CRN_CLI_HPP
