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

#include "abcs/harness/csv.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "absl/strings/numbers.h"
#include "absl/strings/str_split.h"

namespace abcs {

std::string FormatCsvRow(const ResultRow& row) {
  char value[32];
  std::snprintf(value, sizeof(value), "%.9g", row.value);
  return row.algo + "," + row.env + "," + std::to_string(row.seed) + "," +
         std::to_string(row.iteration) + "," +
         std::to_string(row.nodes_touched) + "," + row.metric + "," + value;
}

void WriteCsv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << "\n";
  for (const ResultRow& row : rows) out << FormatCsvRow(row) << "\n";
}

void WriteCsv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  WriteCsv(out, rows);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::vector<ResultRow> ReadCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error(path + ": missing CSV header");
  }
  std::vector<ResultRow> rows;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> f = absl::StrSplit(line, ',');
    ResultRow row;
    bool ok = f.size() == 7 && absl::SimpleAtoi(f[2], &row.seed) &&
              absl::SimpleAtoi(f[3], &row.iteration) &&
              absl::SimpleAtoi(f[4], &row.nodes_touched) &&
              absl::SimpleAtod(f[6], &row.value);
    if (!ok) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": malformed row");
    }
    row.algo = f[0];
    row.env = f[1];
    row.metric = f[5];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace abcs
