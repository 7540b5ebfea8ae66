// Copyright 2026 The dlorder Authors
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

#ifndef DLORDER_ERROR_HPP_
#define DLORDER_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dlorder {

/// 1-based line/column into the program text. Line 0 means "no position"
/// (programmatically built AST nodes).
struct SourcePos {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  std::string str() const;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed program text or a program that fails validation.
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message)
      : Error(pos.known() ? pos.str() + ": " + message : message), pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

/// Bad model spec, element literal, or a query incompatible with the model.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A request the called operation does not support (wrong program mode,
/// unknown goal, arity mismatch of a query).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The saturation step cap was reached before a fixpoint.
class StepCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dlorder

#endif  // DLORDER_ERROR_HPP_
