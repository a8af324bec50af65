#include <algorithm>
#include <sstream>

#include "gpdx/error.hpp"
#include "gpdx/report.hpp"

namespace gpdx {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::parse_error: return "ParseError";
      case ErrorKind::dangling_id: return "DanglingId";
      case ErrorKind::unknown_kind: return "UnknownKind";
      case ErrorKind::unknown_fixture: return "UnknownFixture";
      case ErrorKind::bad_params: return "BadParams";
      case ErrorKind::axiom_violation: return "AxiomViolation";
      case ErrorKind::not_closed: return "NotClosed";
      case ErrorKind::not_normal: return "NotNormal";
      case ErrorKind::not_totally_intransitive:
        return "NotTotallyIntransitive";
      case ErrorKind::q_not_totally_intransitive:
        return "QNotTotallyIntransitive";
      case ErrorKind::object_mismatch: return "ObjectMismatch";
      case ErrorKind::ill_formed_quotient: return "IllFormedQuotient";
      case ErrorKind::ill_defined_action: return "IllDefinedAction";
    }
    return "Error";
  }

  bool is_input_error(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::parse_error:
      case ErrorKind::dangling_id:
      case ErrorKind::unknown_kind:
      case ErrorKind::unknown_fixture:
      case ErrorKind::bad_params: return true;
      default: return false;
    }
  }

  Error::Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  Error::Error(ErrorKind kind, std::string const& what, Report report)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind),
        _report(std::move(report)) {}

  CheckResult& Report::check(std::string_view name) {
    auto it = std::find_if(_checks.begin(), _checks.end(), [&](auto const& c) {
      return c.name == name;
    });
    if (it != _checks.end()) {
      return *it;
    }
    CheckResult c;
    c.name = std::string(name);
    _checks.push_back(std::move(c));
    return _checks.back();
  }

  void Report::fail(std::string_view name, Witness witness) {
    auto& c = check(name);
    ++c.failures;
    if (c.witnesses.size() < kWitnessCap) {
      c.witnesses.push_back(std::move(witness));
    }
  }

  void Report::skip(std::string_view name, std::string reason) {
    auto& c   = check(name);
    c.skipped = true;
    c.detail  = std::move(reason);
  }

  void Report::note(std::string line) {
    _notes.push_back(std::move(line));
  }

  bool Report::ok() const noexcept {
    return std::all_of(_checks.begin(), _checks.end(), [](auto const& c) {
      return c.failures == 0;
    });
  }

  CheckResult const* Report::find(std::string_view name) const {
    for (auto const& c : _checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  bool Report::passed(std::string_view name) const {
    auto const* c = find(name);
    return c != nullptr && c->passed();
  }

  std::size_t Report::failures(std::string_view name) const {
    auto const* c = find(name);
    return c == nullptr ? 0 : c->failures;
  }

  void Report::merge(Report const& other, std::string_view prefix) {
    for (auto const& c : other._checks) {
      auto copy = c;
      copy.name = std::string(prefix) + c.name;
      auto& mine = check(copy.name);
      mine.failures += copy.failures;
      mine.skipped = mine.skipped || copy.skipped;
      if (!copy.detail.empty()) {
        mine.detail = copy.detail;
      }
      for (auto& w : copy.witnesses) {
        if (mine.witnesses.size() < kWitnessCap) {
          mine.witnesses.push_back(std::move(w));
        }
      }
    }
    for (auto const& n : other._notes) {
      _notes.push_back(n);
    }
  }

  void Report::finalize() {
    for (auto& c : _checks) {
      std::sort(c.witnesses.begin(), c.witnesses.end());
      c.witnesses.erase(std::unique(c.witnesses.begin(), c.witnesses.end()),
                        c.witnesses.end());
    }
  }

  std::string Report::render(std::size_t shown) const {
    Report copy = *this;
    copy.finalize();
    std::ostringstream os;
    os << "verdict: " << (copy.ok() ? "pass" : "fail") << '\n';
    for (auto const& c : copy._checks) {
      os << "check " << c.name << ": ";
      if (c.failures > 0) {
        os << "fail (" << c.failures << ")";
      } else if (c.skipped) {
        os << "skipped";
      } else {
        os << "pass";
      }
      if (!c.detail.empty()) {
        os << " -- " << c.detail;
      }
      os << '\n';
      std::size_t k = 0;
      for (auto const& w : c.witnesses) {
        if (k++ == shown) {
          os << "  ...\n";
          break;
        }
        os << "  witness (";
        for (std::size_t i = 0; i < w.size(); ++i) {
          os << (i == 0 ? "" : ", ") << w[i];
        }
        os << ")\n";
      }
    }
    for (auto const& n : copy._notes) {
      os << n << '\n';
    }
    return os.str();
  }

}  // namespace gpdx
