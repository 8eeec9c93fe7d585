#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

/// Bad arguments: mismatched fields, malformed input, unbound variables.
class usage_error : public std::invalid_argument {
public:
  explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An enumeration or counting job would exceed the configured budget.
class budget_error : public std::runtime_error {
public:
  budget_error(const std::string& what, double requested, double budget)
      : std::runtime_error(what + ": requested " + std::to_string(requested) +
                           " points, budget " + std::to_string(budget)),
        requested_points(requested), budget_points(budget) {}
  double requested_points;
  double budget_points;
};

/// An exact-constant inequality check failed.
class check_violation : public std::runtime_error {
public:
  explicit check_violation(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sumprod
