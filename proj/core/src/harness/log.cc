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

#include "abcs/harness/log.h"

#include <cstdlib>
#include <string_view>

namespace abcs {

bool LoggingEnabled() {
  static const bool enabled = [] {
    const char* value = std::getenv("ABCS_LOG");
    return value != nullptr && std::string_view(value) != "" &&
           std::string_view(value) != "0";
  }();
  return enabled;
}

}  // namespace abcs
