#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gyrokin::cli {

/// Process state the command line may consult, injectable for tests.
struct Environment {
  std::optional<std::string> gyrokin_c;  // GYROKIN_C
  std::istream* input = nullptr;          // stream read by `mass --in -`; std::cin when null
};

Environment process_environment();

/// Runs one invocation; args excludes the program name. Returns the exit
/// code: 0 on success, 1 on malformed input, 2 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace gyrokin::cli
