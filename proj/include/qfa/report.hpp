#pragma once

// The four commands behind the qfa executable, returning the rendered report and
// the exit code.

#include <cstddef>
#include <optional>
#include <string>

#include "qfa/gbasis.hpp"
#include "qfa/spec.hpp"

namespace qfa {

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBraid = 2,
  kExitRigid = 3,
  kExitInconclusive = 4,
  kExitWgf = 5,
  kExitHypothesis = 6,
};

enum class Format { Json, Text, Latex };

struct CommandOptions {
  std::optional<int> max_degree;
  std::optional<std::string> volume;
  bool certify_normality = false;
  Format format = Format::Text;
  std::size_t budget = kDefaultBudget;
};

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

CommandOutput cmd_check(const BraidingSpec& spec, const CommandOptions& opt);
CommandOutput cmd_frt(const BraidingSpec& spec, const CommandOptions& opt);
CommandOutput cmd_nichols(const BraidingSpec& spec, const CommandOptions& opt);
CommandOutput cmd_qdet(const BraidingSpec& spec, const CommandOptions& opt);

/// FNV-1a hash of the canonical spec text, as 16 hex digits.
std::string spec_hash(const BraidingSpec& spec);

}  // namespace qfa
