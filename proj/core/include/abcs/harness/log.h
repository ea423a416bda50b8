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

#ifndef ABCS_HARNESS_LOG_H_
#define ABCS_HARNESS_LOG_H_

#include <iostream>

namespace abcs {

// True when the ABCS_LOG environment variable is set to a value other
// than "" or "0". Read once.
bool LoggingEnabled();

}  // namespace abcs

#define ABCS_LOG(message)                               \
  do {                                                  \
    if (::abcs::LoggingEnabled()) {                     \
      std::cerr << "[abcs] " << message << std::endl;   \
    }                                                   \
  } while (false)

#endif  // ABCS_HARNESS_LOG_H_
