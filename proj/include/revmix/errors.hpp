// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef REVMIX_ERRORS_HPP_
#define REVMIX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace revmix {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File system / stream failures. Message names the offending path.
struct IoError : Error {
  using Error::Error;
};

// Unsupported or malformed file contents (e.g. a 24-bit WAV).
struct FormatError : Error {
  using Error::Error;
};

// Caller violated an operation precondition.
struct InvalidArgument : Error {
  using Error::Error;
};

// A decay measurement could not reach the required dynamic range.
struct InsufficientDecay : Error {
  using Error::Error;
};

}  // namespace revmix

#endif  // REVMIX_ERRORS_HPP_
