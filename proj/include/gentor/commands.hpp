// Subcommands behind the gentor executable. Each returns the exit code and
// the run report; nothing here touches stdout or the filesystem.
#pragma once

#include <string>

#include "gentor/report.hpp"

namespace gentor {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kVerified = 0, kCheckFailed = 1, kInputError = 2, kHypothesisUnmet = 3 };

struct CommandResult {
  int exit_code = kVerified;
  Json report;
};

CommandResult cmd_family(long n);
CommandResult cmd_verify(long n, long p, long q);
/// `input` is a tangle word ("[2,2]@default") or, with is_descriptor, "M(...)".
CommandResult cmd_alexander(const std::string& input, bool is_descriptor);
/// `text` is the certificate JSON document.
CommandResult cmd_check(const std::string& text);
CommandResult cmd_verify_grid(long nmin, long nmax, long pmax, long qmax);

/// |sum_i beta_i prod_{j != i} alpha_j|.
BigInt montesinos_determinant(const MontesinosDescriptor& d);

}  // namespace gentor
