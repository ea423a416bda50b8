// Copyright 2026 The ABCs Authors. All rights reserved.
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

#ifndef ABCS_CHECK_H_
#define ABCS_CHECK_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace abcs {

// Raised when a caller breaks an operation's precondition (querying a
// terminal state, applying an illegal action, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised for malformed or out-of-range run configuration.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

namespace internal {

[[noreturn]] inline void FailCheck(const char* file, int line,
                                   const char* condition,
                                   const std::string& message) {
  std::ostringstream out;
  out << file << ":" << line << " check failed: " << condition;
  if (!message.empty()) out << " (" << message << ")";
  throw ContractViolation(out.str());
}

}  // namespace internal
}  // namespace abcs

#define ABCS_CHECK(condition)                                          \
  do {                                                                 \
    if (!(condition)) {                                                \
      ::abcs::internal::FailCheck(__FILE__, __LINE__, #condition, ""); \
    }                                                                  \
  } while (false)

#define ABCS_CHECK_MSG(condition, message)                                  \
  do {                                                                      \
    if (!(condition)) {                                                     \
      std::ostringstream abcs_check_stream_;                                \
      abcs_check_stream_ << message;                                        \
      ::abcs::internal::FailCheck(__FILE__, __LINE__, #condition,           \
                                  abcs_check_stream_.str());                \
    }                                                                       \
  } while (false)

#endif  // ABCS_CHECK_H_
