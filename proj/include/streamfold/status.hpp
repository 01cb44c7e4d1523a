/*
   Copyright 2026 The Streamfold Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace streamfold {

/// Recoverable outcomes of the block and streaming layers.
enum class Status {
  Ok,
  MaximumLengthExceeded,
  KeyLengthMismatch,
  OptionRejected,
};

const char* to_string(Status status);

/// Thrown for recoverable failures raised from constructors and value-returning
/// operations (`Stream::update` returns its status instead).
class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

/// Misuse of an API precondition: misaligned block input, zero unit length,
/// wrong output buffer size. Never a recoverable condition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace streamfold
