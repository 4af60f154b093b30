#pragma once

#include <stdexcept>
#include <string>

namespace topocheck {

enum class Errc {
  kNotATopology,
  kSizeLimitExceeded,
  kWidthMismatch,
  kEmptyCarrier,
  kParseError,
  kDuplicateLabel,
  kUnknownLabel,
  kUnknownIdentifier,
  kGOpenUnsupported,
  kInvalidArgument,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failures additionally remember where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(Errc::kParseError, format(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace topocheck
