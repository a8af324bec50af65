// The gpdx command line driver.
//
// Exit codes: 0 on success or a passing check, 1 when an axiom or a checked
// predicate fails (the report is written to `out`), 2 on malformed input or
// usage errors.

#ifndef GPDX_CLI_HPP_
#define GPDX_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gpdx::cli {

  inline constexpr int kOk           = 0;
  inline constexpr int kCheckFailed  = 1;
  inline constexpr int kInputError   = 2;

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace gpdx::cli

#endif  // GPDX_CLI_HPP_
