#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/document.hpp"

namespace hopfkit {

struct CommandOptions {
  std::optional<std::string> object;
  std::optional<std::string> seed;
  bool unchecked = false;
};

/// Exit codes: 0 verified / true, 1 refuted / false, 2 input or precondition
/// error (including "unsupported").
struct CommandResult {
  int exit_code = 2;
  std::string output;  ///< the input document plus a "report" key; empty if parsing failed
  std::string error;
};

const std::vector<std::string>& command_verbs();

/// Parses the text and runs one verb. Never throws for bad input.
CommandResult run_command(const std::string& verb, const std::string& document_text, const CommandOptions& options);

/// A document holding a single catalog Hopf algebra (or "poly <n>" algebra).
CommandResult catalog_command(const std::string& entry, const std::string& field_spec, const std::string& name);

}  // namespace hopfkit
