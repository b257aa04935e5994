// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LEXLINT_ERRORS_H_
#define LEXLINT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lexlint {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input: bad XML, missing srcML namespace, bad CSV rows.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Invalid project configuration. The message carries the file and key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class EmptyNameError : public Error {
 public:
  EmptyNameError() : Error("identifier is empty") {}
};

class UnknownCategoryError : public Error {
 public:
  explicit UnknownCategoryError(const std::string& name)
      : Error("unknown term category '" + name + "'") {}
};

class EmptyTruthError : public Error {
 public:
  EmptyTruthError() : Error("no validated detections to compute precision over") {}
};

}  // namespace lexlint

#endif  // LEXLINT_ERRORS_H_
