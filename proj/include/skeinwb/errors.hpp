#pragma once

#include <stdexcept>
#include <string>

namespace skeinwb {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a character offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

class OccurrenceNotFound : public Error {
 public:
  using Error::Error;
};

class CalibrationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace skeinwb
