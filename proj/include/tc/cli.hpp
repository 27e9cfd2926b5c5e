#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch for the tc tool, callable in-process.
 *
 * Exit codes: 0 success, 1 computation error (guards, poles, boundary
 * mismatches), 2 usage error (unknown subcommand, malformed input).
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace tc {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tc
