#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

  enum class ErrorKind {
    NotNonCrossing,
    NotDivisor,
    NotReduced,
    NotReflection,
    NotInTc,
    NotEmbedded,
    IndexOutOfRange,
  };

  constexpr std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::NotNonCrossing: return "NotNonCrossing";
      case ErrorKind::NotDivisor: return "NotDivisor";
      case ErrorKind::NotReduced: return "NotReduced";
      case ErrorKind::NotReflection: return "NotReflection";
      case ErrorKind::NotInTc: return "NotInTc";
      case ErrorKind::NotEmbedded: return "NotEmbedded";
      case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    }
    return "Unknown";
  }

  // A precondition of a public operation failed on mathematical grounds.
  class DomainError : public std::runtime_error {
   public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

   private:
    ErrorKind kind_;
  };

  // The curve engine produced something that fails its own certification.
  // Never a user error: seeing one of these means there is a bug.
  class EngineError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // Malformed textual input (words, tuples, braids, monoid elements).
  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

}  // namespace ncg
