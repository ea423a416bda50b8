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

#ifndef ABCS_HARNESS_CSV_H_
#define ABCS_HARNESS_CSV_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "abcs/harness/experiment.h"

namespace abcs {

inline constexpr char kCsvHeader[] =
    "algo,env,seed,iteration,nodes_touched,metric,value";

// One data line without the trailing newline; reals use 9 significant
// digits.
std::string FormatCsvRow(const ResultRow& row);

void WriteCsv(std::ostream& out, const std::vector<ResultRow>& rows);
// Throws std::runtime_error when the file cannot be written.
void WriteCsv(const std::vector<ResultRow>& rows, const std::string& path);

// Throws std::runtime_error on I/O failure or a malformed file.
std::vector<ResultRow> ReadCsv(const std::string& path);

}  // namespace abcs

#endif  // ABCS_HARNESS_CSV_H_
