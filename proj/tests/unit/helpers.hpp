// Small conveniences shared by the unit tests.

#ifndef GPDX_TESTS_HELPERS_HPP_
#define GPDX_TESTS_HELPERS_HPP_

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpdx/cli.hpp"
#include "gpdx/groupoid.hpp"
#include "gpdx/report.hpp"

namespace testing {

  inline std::vector<std::string> selected(std::vector<std::string> const& names,
                                           gpdx::Mask const&               mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (mask[i]) {
        out.push_back(names[i]);
      }
    }
    return out;
  }

  inline std::set<gpdx::Witness> witnesses(gpdx::Report const& r, std::string const& check) {
    auto const* c = r.find(check);
    if (c == nullptr) {
      return {};
    }
    return {c->witnesses.begin(), c->witnesses.end()};
  }

  struct CliResult {
    int         code;
    std::string out;
    std::string err;
  };

  inline CliResult cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = gpdx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace testing

#endif  // GPDX_TESTS_HELPERS_HPP_
