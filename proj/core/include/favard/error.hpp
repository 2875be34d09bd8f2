#pragma once

#include <stdexcept>
#include <string>

namespace favard {

/// Broad category of a failure; the CLI maps each to an exit code.
enum class ErrorKind { validation, resource, numeric };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

#define FAVARD_DEFINE_ERROR(Type, Kind)                                        \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& what) : Error(ErrorKind::Kind, #Type, what) {} \
  };

FAVARD_DEFINE_ERROR(CardinalityError, validation)
FAVARD_DEFINE_ERROR(DigitRangeError, validation)
FAVARD_DEFINE_ERROR(DuplicateDigitError, validation)
FAVARD_DEFINE_ERROR(SizeError, validation)
FAVARD_DEFINE_ERROR(DomainError, validation)
FAVARD_DEFINE_ERROR(ConfigError, validation)
FAVARD_DEFINE_ERROR(ResourceError, resource)
FAVARD_DEFINE_ERROR(GridTooCoarse, numeric)

#undef FAVARD_DEFINE_ERROR

}  // namespace favard
