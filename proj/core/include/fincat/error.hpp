#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

// Thrown for usage errors (unknown ids, shape mismatches, exceeded caps).
// Structural law violations are reported through Report instead, so callers
// can inspect every witness.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

// One detected law violation: a stable code plus the witnessing ids.
struct Issue {
  std::string code;
  std::string detail;
};

struct Report {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const {
    std::ostringstream out;
    for (const auto& issue : issues) out << issue.code << ": " << issue.detail << "\n";
    return out.str();
  }
};

}  // namespace fincat
