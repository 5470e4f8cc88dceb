#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vknot {

enum class ErrorCode {
  SyntaxError,
  SignMismatch,
  PassageDuplicate,
  DanglingChord,
  InvalidInput,
  NotApplicable,
  NoSuchChord,
  MultiComponent,
  EmptyCode,
  ZeroBracket,
  IndexOutOfRange,
  SizeCap,
  NotBiquandle,
  UnknownCatalogName,
  UnknownFlag,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vknot
