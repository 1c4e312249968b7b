#pragma once

#include <stdexcept>
#include <string>

namespace gcis {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedText : public Error {
 public:
  using Error::Error;
};

// A value handed to a codec does not fit the requested representation.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Simple8b cannot represent values >= 2^60.
class UnencodableValue : public RangeError {
 public:
  using RangeError::RangeError;
};

class CorruptArchive : public Error {
 public:
  using Error::Error;
};

class TruncatedArchive : public CorruptArchive {
 public:
  using CorruptArchive::CorruptArchive;
};

class BadMagic : public CorruptArchive {
 public:
  using CorruptArchive::CorruptArchive;
};

class UnsupportedVersion : public CorruptArchive {
 public:
  using CorruptArchive::CorruptArchive;
};

}  // namespace gcis
