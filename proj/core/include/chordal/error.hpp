#ifndef CHORDAL_ERROR_HPP
#define CHORDAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chordal {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed text, invalid parameters, mixed rings.
struct InvalidArgument : Error {
  using Error::Error;
};

struct RingMismatch : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// Syntax error with source position (1-based line and column).
struct ParseError : InvalidArgument {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : InvalidArgument(msg + " (line " + std::to_string(line_) + ", column " +
                        std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

// A configured resource cap was hit; the computation was aborted, no partial
// result is returned.
struct ResourceLimit : Error {
  using Error::Error;
};

// Buchberger hit the degree cap before the basis was complete.
struct DegreeCapExceeded : ResourceLimit {
  int cap;
  explicit DegreeCapExceeded(int cap_)
      : ResourceLimit("Groebner degree cap " + std::to_string(cap_) +
                      " exceeded before completion"),
        cap(cap_) {}
  DegreeCapExceeded(const std::string& msg, int cap_)
      : ResourceLimit(msg + " (degree cap " + std::to_string(cap_) + ")"), cap(cap_) {}
};

}  // namespace chordal

#endif
