#pragma once

#include <stdexcept>
#include <string>

namespace rfeq {

// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input: word syntax, presentation files, subgroup spec files.
// The message carries "file:line:" context when the input came from a file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace rfeq
