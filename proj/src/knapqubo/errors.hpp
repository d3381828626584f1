// Copyright 2026 The knapqubo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KNAPQUBO_ERRORS_HPP_
#define KNAPQUBO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace knapqubo {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorKind {
  kValidation = 2,
  kSizeLimit = 3,
  kNumerical = 4,
  kIo = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what)
      : Error(ErrorKind::kSizeLimit, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorKind::kNumerical, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

}  // namespace knapqubo

#endif  // KNAPQUBO_ERRORS_HPP_
