#pragma once

#include <stdexcept>
#include <string>

namespace unram {

// Failure class, used by the CLI to pick an exit code.
enum class ErrorKind { input, budget, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define UNRAM_DEFINE_ERROR(Name, Kind)                               \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(Kind, what) {}    \
  };

UNRAM_DEFINE_ERROR(InputError, ErrorKind::input)
UNRAM_DEFINE_ERROR(NotUnimodular, ErrorKind::input)
UNRAM_DEFINE_ERROR(LengthMismatch, ErrorKind::input)
UNRAM_DEFINE_ERROR(UnknownBuiltin, ErrorKind::input)
UNRAM_DEFINE_ERROR(NotOddPrime, ErrorKind::input)
UNRAM_DEFINE_ERROR(NotEnoughElements, ErrorKind::input)
UNRAM_DEFINE_ERROR(GroupTooLarge, ErrorKind::budget)
UNRAM_DEFINE_ERROR(OracleTooLarge, ErrorKind::budget)
UNRAM_DEFINE_ERROR(GroupTooLargeForB0, ErrorKind::budget)
UNRAM_DEFINE_ERROR(InconsistentExtension, ErrorKind::internal)
UNRAM_DEFINE_ERROR(InternalInconsistency, ErrorKind::internal)

#undef UNRAM_DEFINE_ERROR

}  // namespace unram
