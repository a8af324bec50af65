// Result of validating raw data into an immutable structure.

#ifndef GPDX_CHECKED_HPP_
#define GPDX_CHECKED_HPP_

#include <optional>
#include <utility>

#include "gpdx/error.hpp"
#include "gpdx/report.hpp"

namespace gpdx {

  // Holds a validated structure, or the report explaining why validation
  // failed.
  template <typename T>
  class Checked {
   public:
    Checked(std::optional<T> value, Report report)
        : _value(std::move(value)), _report(std::move(report)) {}

    bool ok() const noexcept {
      return _value.has_value();
    }
    explicit operator bool() const noexcept {
      return ok();
    }

    // Throws an axiom_violation Error carrying the report if invalid.
    T const& value() const;

    T const& operator*() const {
      return value();
    }
    T const* operator->() const {
      return &value();
    }

    Report const& report() const noexcept {
      return _report;
    }

   private:
    std::optional<T> _value;
    Report           _report;
  };

  template <typename T>
  T const& Checked<T>::value() const {
    if (!_value) {
      throw Error(ErrorKind::axiom_violation, "validation failed", _report);
    }
    return *_value;
  }

}  // namespace gpdx

#endif  // GPDX_CHECKED_HPP_
