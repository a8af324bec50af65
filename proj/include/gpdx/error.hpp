// Error kinds raised by the library.
//
// Input errors (malformed documents, unresolved ids, unknown fixtures) are
// distinguished from mathematical failures (axiom violations, precondition
// predicates such as normality), since the command line driver maps them to
// different exit codes.

#ifndef GPDX_ERROR_HPP_
#define GPDX_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gpdx/report.hpp"

namespace gpdx {

  enum class ErrorKind {
    // malformed input
    parse_error,
    dangling_id,
    unknown_kind,
    unknown_fixture,
    bad_params,
    // mathematical failures
    axiom_violation,
    not_closed,
    not_normal,
    not_totally_intransitive,
    q_not_totally_intransitive,
    object_mismatch,
    ill_formed_quotient,
    ill_defined_action,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // True for the kinds that describe malformed input rather than a failed
  // mathematical check.
  bool is_input_error(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what);
    Error(ErrorKind kind, std::string const& what, Report report);

    ErrorKind kind() const noexcept {
      return _kind;
    }

    // Present for axiom violations; carries every failed check.
    std::optional<Report> const& report() const noexcept {
      return _report;
    }

   private:
    ErrorKind             _kind;
    std::optional<Report> _report;
  };

}  // namespace gpdx

#endif  // GPDX_ERROR_HPP_
