#pragma once

#include <stdexcept>
#include <string>

namespace normcat {

/// Malformed or inconsistent input (dangling ids, schema violations,
/// precondition failures on user data). Distinct from an audit FAIL, which
/// is a verdict about well-formed input, and from std::logic_error, which
/// marks a bug in calling code.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::string message, std::string where = "")
      : std::runtime_error(where.empty() ? message : message + " (at " + where + ")"),
        where_(std::move(where)) {}

  /// JSON pointer or similar locator of the offending input, when known.
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace normcat
