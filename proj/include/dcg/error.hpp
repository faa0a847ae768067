#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcg {

enum class Errc {
  NotAGroup,
  CapExceeded,
  BadParameter,
  ParseError,
  FileError,
  NotACocycle,
  NotCommuting,
  BadExtension,
  BaseMismatch,
  OutOfRange,
  InternalVerificationFailure,
  TheoremViolation,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ParseError: return "ParseError";
    case Errc::FileError: return "FileError";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::BadExtension: return "BadExtension";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InternalVerificationFailure: return "InternalVerificationFailure";
    case Errc::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : Error(Errc::ParseError, "at offset " + std::to_string(offset) + ": " + message),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace dcg
