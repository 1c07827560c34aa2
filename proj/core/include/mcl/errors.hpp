#pragma once

#include <stdexcept>
#include <string>

namespace mcl {

/// Thrown when an enumeration or closure would exceed its configured budget.
/// Callers that map errors to exit codes treat this separately from bad input.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcl
