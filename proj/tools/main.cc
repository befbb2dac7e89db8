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


#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.h"
#include "gbent/analysis.h"
#include "gbent/constructions.h"

namespace {

using gbent::cli::kExitFailed;
using gbent::cli::kExitInput;
using gbent::cli::kExitOk;

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

gbent::GBFunc load(const std::string& path) {
  return gbent::cli::parse_table(read_source(path));
}

int construct(const std::vector<int>& spread, const std::vector<std::string>& lift,
              const std::vector<int>& quad) {
  const int chosen = !spread.empty() + !lift.empty() + !quad.empty();
  if (chosen != 1) {
    throw std::invalid_argument("construct: give exactly one of --spread, --lift, --quad");
  }
  if (!spread.empty()) {
    const auto field = gbent::gf_make(spread[0], spread[1]);
    const auto f = gbent::spread_gbent(
        gbent::regular_spread(field),
        gbent::default_balanced_map(spread[0], spread[1], spread[2]));
    std::cout << gbent::cli::format_table(f);
    return kExitOk;
  }
  if (!lift.empty()) {
    int k = 0;
    try {
      k = std::stoi(lift[0]);
    } catch (const std::exception&) {
      throw std::invalid_argument("construct --lift: k must be an integer");
    }
    std::cout << gbent::cli::format_table(gbent::lift_bent(load(lift[1]), k));
    return kExitOk;
  }
  // --quad p l k n
  const auto f = gbent::quadratic_gbent_lk(quad[0], quad[1], quad[2], quad[3]);
  std::cout << gbent::cli::format_table(f);
  if (!gbent::is_gbent(f).gbent) {
    std::cerr << "warning: the quadratic function is not gbent\n";
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of generalized bent functions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool timings = false;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "plain"}));
  app.add_flag("--timings", timings, "Add wall-clock timings to the report");

  std::string table;
  auto add_table_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("table", table, "Table file, or - for stdin")->required();
    return sub;
  };
  add_table_cmd("analyze", "gbent test, regularity and dual");
  add_table_cmd("zpkbent", "Z_{p^k}-bentness by definition and by scaling");
  auto* characterize = add_table_cmd("characterize", "component function characterization");
  std::string mode = "A";
  int t = 1;
  int s = 1;
  characterize->add_option("--mode", mode, "A, B, C or D")
      ->check(CLI::IsMember({"A", "B", "C", "D"}));
  characterize->add_option("--t", t, "block size")->check(CLI::PositiveNumber);
  characterize->add_option("--s", s, "number of blocks (mode B)")
      ->check(CLI::PositiveNumber);
  add_table_cmd("rds", "relative difference set checks on the graph");
  add_table_cmd("gray", "plateaued order of the Gray image");
  app.add_subcommand("selftest", "run the built-in identity suites");

  auto* construct_cmd = app.add_subcommand("construct", "print a constructed table");
  std::vector<int> spread;
  std::vector<std::string> lift;
  std::vector<int> quad;
  construct_cmd->add_option("--spread", spread, "p m k")->expected(3);
  construct_cmd->add_option("--lift", lift, "k table")->expected(2);
  construct_cmd->add_option("--quad", quad, "p l k n")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (construct_cmd->parsed()) return construct(spread, lift, quad);

    gbent::cli::Request req;
    req.command = app.get_subcommands().front()->get_name();
    req.timings = timings;
    if (req.command != "selftest") req.input = load(table);
    if (req.command == "characterize") {
      const char m = mode[0];
      req.spec.mode = m == 'A'   ? gbent::ComponentMode::kA
                      : m == 'B' ? gbent::ComponentMode::kB
                      : m == 'C' ? gbent::ComponentMode::kC
                                 : gbent::ComponentMode::kD;
      req.spec.t = t;
      req.spec.s = s;
    }
    const gbent::cli::Report rep = gbent::cli::run(req);
    std::cout << gbent::cli::emit_report(
        rep, format == "json" ? gbent::cli::Format::kJson : gbent::cli::Format::kPlain);
    return rep.status;
  } catch (const gbent::cli::TableError& e) {
    std::cerr << "error: " << (table == "-" ? "<stdin>" : table) << ": "
              << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gbent::AnalysisError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}
