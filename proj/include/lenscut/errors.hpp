#pragma once

#include <stdexcept>
#include <string>

namespace lenscut {

// Violated operation precondition (bad input, contract breach). CLI exit code 2.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural check failed on computed output. CLI exit code 3.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhausted internal retries (shear/genericity draws). Should not occur in practice.
class retry_exhausted_error : public std::runtime_error {
 public:
  explicit retry_exhausted_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lenscut
