// Copyright 2026 The gbent Authors.
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


// Library side of the gbent command line tool: table files, commands and
// report serialization. The executable in main.cc only parses flags.

#ifndef GBENT_TOOLS_CLI_H_
#define GBENT_TOOLS_CLI_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gbent/func.h"
#include "json.hpp"

namespace gbent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

// Malformed table file. line and column are 1-based; column 0 means the
// whole line.
class TableError : public std::runtime_error {
 public:
  TableError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Header "p l n k" (single spaces), then p^(l n) values in [0, p^k).
// Lines starting with '#' are ignored.
GBFunc parse_table(std::string_view text);

// Inverse of parse_table: header line, then p^l values per line.
std::string format_table(const GBFunc& f);

// Hex SHA-256 of format_table(f).
std::string table_digest(const GBFunc& f);

enum class Format { kJson, kPlain };

struct Report {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  int status = kExitOk;
};

struct Request {
  std::string command;  // analyze, zpkbent, characterize, rds, gray, selftest
  std::optional<GBFunc> input;
  ComponentSpec spec;   // characterize only
  bool timings = false;
};

// Runs one command. Library argument errors propagate as
// std::invalid_argument.
Report run(const Request& request);

std::string emit_report(const Report& report, Format format);

}  // namespace gbent::cli

#endif  // GBENT_TOOLS_CLI_H_
