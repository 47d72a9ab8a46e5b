#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Descriptor or model that violates its axioms.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input; carries the JSON path of the defect.
class DescriptorError : public std::invalid_argument {
 public:
  DescriptorError(std::string path, const std::string& what)
      : std::invalid_argument(what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A numerical procedure failed to converge on an input it should handle.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orlicz
