#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imax {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 input. byte_offset is relative to the start of the
// encoded graph (after any ">>graph6<<" header); line is 1-based and 0 when
// the text did not come from a stream.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset, std::size_t line = 0)
      : Error(format(what, byte_offset, line)), byte_offset_(byte_offset), line_(line) {}

  std::size_t byte_offset() const { return byte_offset_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& what, std::size_t off, std::size_t line) {
    std::string s = what + " at byte " + std::to_string(off);
    if (line) s = "line " + std::to_string(line) + ": " + s;
    return s;
  }

  std::size_t byte_offset_;
  std::size_t line_;
};

// A size or order limit was exceeded (vertex cap, brute-force cap, ...).
class CapError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace imax
