// Copyright 2026 The shiftcover Authors
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

#ifndef SHIFTCOVER_ERROR_HPP_
#define SHIFTCOVER_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace shiftcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query reached past the finite window of a table or generator.
class HorizonError : public Error {
 public:
  using Error::Error;
};

// A generator description that cannot produce an infinite word.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class StabilizationError : public Error {
 public:
  StabilizationError(const std::string& what, std::size_t budget)
      : Error(what), budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class UnsupportedArithmetic : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Either a value or a diagnostic explaining why the finite surrogate could
// not certify one.  Used by operations whose failure mode is a report rather
// than an exception.
template <class T>
class Checked {
 public:
  static Checked ok(T value) {
    Checked c;
    c.value_ = std::move(value);
    return c;
  }
  static Checked fail(std::string diagnostic) {
    Checked c;
    c.diagnostic_ = std::move(diagnostic);
    return c;
  }

  bool has_value() const noexcept { return value_.has_value(); }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const {
    if (!value_) throw Error(diagnostic_);
    return *value_;
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  Checked() = default;
  std::optional<T> value_;
  std::string diagnostic_;
};

}  // namespace shiftcover

#endif  // SHIFTCOVER_ERROR_HPP_
