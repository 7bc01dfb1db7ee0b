// include/diarcomb/errors.h

// Copyright 2026  The diarcomb authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARCOMB_ERRORS_H_
#define DIARCOMB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace diarcomb {

// Error taxonomy shared by the library and the CLI. Each kind maps to a
// stable process exit code so scripts can distinguish failure modes.
enum class ErrorKind {
  kUsage,       // bad command line / bad API usage
  kParse,       // malformed input text (RTTM, UEM)
  kValidation,  // inputs violate a documented invariant
  kCapacity,    // a resource guard refused the computation
  kIo,          // file could not be read or written
};

inline int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return 2;
    case ErrorKind::kParse: return 3;
    case ErrorKind::kValidation: return 4;
    case ErrorKind::kCapacity: return 5;
    case ErrorKind::kIo: return 6;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return ExitCodeFor(kind_); }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string &m) : Error(ErrorKind::kUsage, m) {}
};

class ParseError : public Error {
 public:
  // line is 1-based; 0 means "not tied to a line".
  ParseError(const std::string &m, int line = 0)
      : Error(ErrorKind::kParse,
              line > 0 ? m + " (line " + std::to_string(line) + ")" : m),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &m)
      : Error(ErrorKind::kValidation, m) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string &m)
      : Error(ErrorKind::kCapacity, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string &m) : Error(ErrorKind::kIo, m) {}
};

}  // namespace diarcomb

#endif  // DIARCOMB_ERRORS_H_
