// Pass/fail reports with witness tuples.

#ifndef GPDX_REPORT_HPP_
#define GPDX_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpdx/types.hpp"

namespace gpdx {

  struct CheckResult {
    std::string          name;
    bool                 skipped  = false;
    std::size_t          failures = 0;
    std::vector<Witness> witnesses;  // at most Report::kWitnessCap kept
    std::string          detail;     // reason for a skip, or a summary line

    bool passed() const noexcept {
      return failures == 0 && !skipped;
    }
  };

  // An ordered list of named checks.  The verdict is pass iff no check failed.
  // Skipped checks (a prerequisite failed) do not fail the verdict on their
  // own; a prerequisite failure already does.
  class Report {
   public:
    static constexpr std::size_t kWitnessCap = 4096;

    // Registers a check as passed if it is not yet present.
    CheckResult& check(std::string_view name);

    void fail(std::string_view name, Witness witness);
    void skip(std::string_view name, std::string reason);
    void note(std::string line);

    bool ok() const noexcept;
    bool passed(std::string_view name) const;
    std::size_t failures(std::string_view name) const;
    CheckResult const* find(std::string_view name) const;

    std::vector<CheckResult> const& checks() const noexcept {
      return _checks;
    }
    std::vector<std::string> const& notes() const noexcept {
      return _notes;
    }

    // Appends every check of `other`, prefixing names with `prefix`.
    void merge(Report const& other, std::string_view prefix = {});

    // Sorts witnesses of every check; called before rendering.
    void finalize();

    // Deterministic text rendering, at most `shown` witnesses per check.
    std::string render(std::size_t shown = 8) const;

   private:
    std::vector<CheckResult> _checks;
    std::vector<std::string> _notes;
  };

}  // namespace gpdx

#endif  // GPDX_REPORT_HPP_
