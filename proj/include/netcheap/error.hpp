#pragma once

#include <stdexcept>
#include <string>

namespace netcheap {

// Precondition failure. `code` is a stable machine-readable tag
// (e.g. "self_loop", "guard_exceeded") that the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace netcheap
