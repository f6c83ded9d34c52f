// Copyright 2026 The Authors.
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

#ifndef GCNATTACK_ERRORS_HPP_
#define GCNATTACK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gcnattack {

// Every error raised by the library derives from Error; the category string
// doubles as the CLI diagnostic prefix.
class Error : public std::runtime_error {
 public:
  Error(const std::string& category, const std::string& what)
      : std::runtime_error(category + ": " + what), category_(category) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

// Dimension or index mismatch between related objects.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what)
      : Error("structural", what) {}
};

// Attempt to touch the original graph blocks.
class ImmutabilityViolation : public Error {
 public:
  explicit ImmutabilityViolation(const std::string& what)
      : Error("immutability", what) {}
};

// add on a 1, drop on a 0, or a diagonal C entry.
class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(const std::string& what)
      : Error("constraint", what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error("numerical", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& file, long line, const std::string& what)
      : Error("parse", file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}
  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace gcnattack

#endif  // GCNATTACK_ERRORS_HPP_
