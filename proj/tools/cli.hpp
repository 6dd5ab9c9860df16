#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heegaard::cli {

enum ExitCode : int {
  kAccept = 0,
  kReject = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kInternalInconsistency = 4,
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegaard::cli
