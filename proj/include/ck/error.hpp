#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ck {

// Single exception type for the whole library. `kind` is the stable,
// machine-readable discriminator (e.g. "FieldMismatch", "BudgetExceeded");
// the CLI serializes it into error reports and tests match on it.
class CkError : public std::runtime_error {
public:
  CkError(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& msg) {
  throw CkError(std::move(kind), msg);
}

}  // namespace ck
