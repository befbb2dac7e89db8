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


#include "cli.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gbent/analysis.h"
#include "gbent/constructions.h"
#include "gbent/cyclotomic.h"
#include "gbent/int_math.h"
#include "gbent/rds.h"
#include "gbent/transform.h"

namespace gbent::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_ws(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) {
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
  }
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

bool is_blank(std::string_view line) {
  return split_ws(line).empty();
}

}  // namespace

TableError::TableError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : "") +
                         ": " + what),
      line_(line),
      column_(column) {}

GBFunc parse_table(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }

  std::size_t li = 0;
  auto skippable = [&](std::string_view line) {
    return line.starts_with('#') || is_blank(line);
  };
  while (li < lines.size() && skippable(lines[li])) ++li;
  if (li == lines.size()) throw TableError(1, 0, "missing header \"p l n k\"");

  const int header_line = static_cast<int>(li) + 1;
  const std::string_view header = lines[li];
  std::int64_t hv[4];
  {
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      const std::size_t end = i < 3 ? header.find(' ', pos) : header.size();
      if (end == std::string_view::npos) {
        throw TableError(header_line, 0,
                         "header must be four integers \"p l n k\" separated by single spaces");
      }
      const auto v = parse_int(header.substr(pos, end - pos));
      if (!v || header.substr(pos, end - pos).starts_with('-') ||
          header.substr(pos, end - pos).starts_with('+')) {
        throw TableError(header_line, static_cast<int>(pos) + 1,
                         "header must be four integers \"p l n k\" separated by single spaces");
      }
      hv[i] = *v;
      pos = end + 1;
    }
  }
  const std::int64_t p = hv[0], l = hv[1], n = hv[2], k = hv[3];
  const int col_l = static_cast<int>(header.find(' ')) + 2;
  if (p < 3 || p > 1000000 || !is_prime(p)) {
    throw TableError(header_line, 1, "p = " + std::to_string(p) + " is not an odd prime");
  }
  if (l < 1 || n < 1 || k < 1 || l > 64 || n > 64 || k > 64) {
    throw TableError(header_line, 0, "l, n, k must be positive");
  }
  if (l > k) {
    throw TableError(header_line, col_l, "l = " + std::to_string(l) +
                                             " exceeds k = " + std::to_string(k));
  }
  std::int64_t expected = 0;
  std::int64_t modulus = 0;
  try {
    expected = ipow(ipow(p, static_cast<int>(l)), static_cast<int>(n));
    modulus = ipow(p, static_cast<int>(k));
  } catch (const std::overflow_error&) {
    throw TableError(header_line, 0, "table size p^(l n) or modulus p^k too large");
  }
  if (expected > (std::int64_t{1} << 24)) {
    throw TableError(header_line, 0, "table size p^(l n) too large");
  }

  std::vector<std::int64_t> values;
  values.reserve(expected);
  int last_line = header_line;
  for (++li; li < lines.size(); ++li) {
    if (lines[li].starts_with('#')) continue;
    const int line_no = static_cast<int>(li) + 1;
    for (const Token& tok : split_ws(lines[li])) {
      if (static_cast<std::int64_t>(values.size()) == expected) {
        throw TableError(line_no, tok.column,
                         "more than the expected " + std::to_string(expected) +
                             " values");
      }
      const auto v = parse_int(tok.text);
      if (!v) {
        throw TableError(line_no, tok.column,
                         "\"" + std::string(tok.text) + "\" is not a base-10 integer");
      }
      if (*v < 0 || *v >= modulus) {
        throw TableError(line_no, tok.column,
                         "value " + std::to_string(*v) + " outside [0, " +
                             std::to_string(modulus) + ")");
      }
      values.push_back(*v);
      last_line = line_no;
    }
  }
  if (static_cast<std::int64_t>(values.size()) != expected) {
    throw TableError(last_line, 0,
                     "expected " + std::to_string(expected) + " values, found " +
                         std::to_string(values.size()));
  }
  return GBFunc(static_cast<int>(p), static_cast<int>(l), static_cast<int>(n),
                static_cast<int>(k), std::move(values));
}

std::string format_table(const GBFunc& f) {
  std::string out = std::to_string(f.p()) + " " + std::to_string(f.l()) + " " +
                    std::to_string(f.n()) + " " + std::to_string(f.k()) + "\n";
  const std::int64_t row = f.domain_radix();
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += std::to_string(f[i]);
    out += (static_cast<std::int64_t>(i + 1) % row == 0) ? '\n' : ' ';
  }
  return out;
}

std::string table_digest(const GBFunc& f) {
  const std::string text = format_table(f);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("table_digest: SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(Json* sink) : sink_(sink) {}
  void lap(const char* name) {
    const auto now = Clock::now();
    if (sink_) {
      (*sink_)[name] = std::chrono::duration<double>(now - last_).count();
    }
    last_ = now;
  }

 private:
  Json* sink_;
  Clock::time_point last_ = Clock::now();
};

Json echo(const GBFunc& f) {
  return {{"p", f.p()}, {"l", f.l()}, {"n", f.n()}, {"k", f.k()},
          {"sha256", table_digest(f)}};
}

Json values_of(std::span<const std::int64_t> v) {
  return Json(std::vector<std::int64_t>(v.begin(), v.end()));
}

const char* mode_name(ComponentMode m) {
  switch (m) {
    case ComponentMode::kA: return "A";
    case ComponentMode::kB: return "B";
    case ComponentMode::kC: return "C";
    case ComponentMode::kD: return "D";
  }
  return "?";
}

const GBFunc& need_input(const Request& r) {
  if (!r.input) throw std::invalid_argument(r.command + ": no input table");
  return *r.input;
}

void run_analyze(const GBFunc& f, Report& rep, Timer& timer) {
  const Spectrum s = wht_fast(f);
  timer.lap("transform");
  const GbentVerdict v = is_gbent(s);
  rep.doc["gbent"] = v.gbent;
  if (!v.gbent) {
    rep.doc["witness"] = *v.witness;
    rep.status = kExitFailed;
    return;
  }
  const DualAnalysis a = classify_and_dual(f);
  timer.lap("dual");
  rep.doc["regularity"] = a.regularity.to_string();
  rep.doc["gauss_flag"] = a.certificate.gauss_flag;
  rep.doc["dual"] = values_of(a.certificate.dual.table());
  rep.doc["sign_pattern"] = a.certificate.signs;
  const bool rebuilt = reconstruct_check(s, a.certificate);
  rep.doc["reconstruction"] = rebuilt;
  if (!rebuilt) rep.status = kExitFailed;
}

void run_zpkbent(const GBFunc& f, Report& rep, Timer& timer) {
  const bool by_def = is_zpk_bent_by_definition(f);
  timer.lap("definition");
  const bool by_scale = is_zpk_bent_by_scaling(f);
  timer.lap("scaling");
  rep.doc["zpk_bent"] = {{"by_definition", by_def}, {"by_scaling", by_scale}};
  if (!by_def || !by_scale) rep.status = kExitFailed;
}

void run_characterize(const GBFunc& f, const ComponentSpec& spec, Report& rep,
                      Timer& timer) {
  const bool gbent = is_gbent(f).gbent;
  const CharacterizationResult r = characterization_check(f, spec);
  timer.lap("characterization");
  Json entries = Json::array();
  for (std::size_t u = 0; u < r.certificate.entries.size(); ++u) {
    const auto& e = r.certificate.entries[u];
    Json je = {{"u", u}, {"found", e.found}};
    if (e.found) {
      je["sign"] = e.sign;
      je["j"] = e.j;
      je["d"] = e.d;
    }
    entries.push_back(std::move(je));
  }
  const auto& layout = r.certificate.layout;
  rep.doc["gbent"] = gbent;
  rep.doc["characterization"] = {
      {"mode", mode_name(spec.mode)},
      {"t", spec.t},
      {"s", spec.s},
      {"codomain_exp", layout.codomain_exp},
      {"coeff_radix", layout.coeff_radix},
      {"dims", layout.dims},
      {"holds", r.holds},
      {"agrees_with_gbent", r.holds == gbent},
      {"entries", std::move(entries)}};
  if (!r.holds || r.holds != gbent) rep.status = kExitFailed;
}

void run_rds(const GBFunc& f, Report& rep, Timer& timer) {
  const SubsetR r = graph_of(f);
  const RdsParams params = RdsParams::for_graph(r.spec());
  const RdsVerdict brute = rds_bruteforce(r, params);
  timer.lap("bruteforce");
  const bool chars = rds_characters(r, params);
  timer.lap("characters");
  Json j = {{"params", {params.u, params.v, params.kk, params.lambda}},
            {"bruteforce", brute.rds},
            {"characters", chars}};
  if (brute.witness) j["witness"] = {brute.witness->x, brute.witness->y};
  rep.doc["rds"] = std::move(j);
  if (!brute.rds || !chars) rep.status = kExitFailed;
}

void run_gray(const GBFunc& f, Report& rep, Timer& timer) {
  const bool gbent = is_gbent(f).gbent;
  rep.doc["gbent"] = gbent;
  if (!gbent) {
    rep.doc["gray_plateaued"] = nullptr;
    rep.status = kExitFailed;
    return;
  }
  const auto order = plateaued_order(gray_image(f));
  timer.lap("gray");
  const bool ok = order && order->s == f.k() - 1;
  Json j = {{"plateaued", ok}, {"expected_s", f.k() - 1}};
  j["s"] = order ? Json(order->s) : Json(nullptr);
  if (order) j["uniform"] = order->uniform;
  rep.doc["gray_plateaued"] = std::move(j);
  if (!ok) rep.status = kExitFailed;
}

// ---------------------------------------------------------------------------
// selftest

struct Tally {
  int passed = 0;
  int failed = 0;
  void add(bool ok) { ok ? ++passed : ++failed; }
};

GBFunc random_func(std::mt19937_64& rng, int p, int l, int n, int k) {
  std::uniform_int_distribution<std::int64_t> dist(0, ipow(p, k) - 1);
  std::vector<std::int64_t> t(ipow(ipow(p, l), n));
  for (auto& v : t) v = dist(rng);
  return GBFunc(p, l, n, k, std::move(t));
}

Tally suite_cyclotomic() {
  Tally t;
  struct Ptk { int p, t, k; };
  for (auto [p, tt, k] : {Ptk{3, 1, 2}, Ptk{3, 1, 3}, Ptk{3, 2, 3}, Ptk{5, 1, 2}}) {
    const CycloParams params(p, k);
    for (std::int64_t a = 0; a < ipow(p, tt); ++a) {
      t.add(digit_identity_check(a, tt, params));
    }
  }
  struct Ptlk { int p, t, l, k; };
  for (auto [p, tt, l, k] : {Ptlk{3, 1, 2, 2}, Ptlk{3, 1, 3, 3}, Ptlk{5, 1, 2, 2}}) {
    const CycloParams params(p, k);
    const std::int64_t radix = ipow(p, tt);
    for (std::int64_t i = 0; i < ipow(radix, l - 1); ++i) {
      const auto c = to_digits(i, radix, l - 1);
      t.add(gamma_product_form(c, tt, l, params) == gamma(c, tt, l, params));
      t.add(gamma_inversion_check(c, tt, l, params));
    }
  }
  for (int p : {3, 5, 7}) {
    const CycloParams params(p, 1);
    const CycInt g = gauss_sum(params);
    t.add(g * g == CycInt::integer(params, p % 4 == 1 ? p : -p));
  }
  return t;
}

Tally suite_transform() {
  Tally t;
  std::mt19937_64 rng(101);
  struct Shape { int p, l, n, k; };
  for (int round = 0; round < 5; ++round) {
    for (auto s : {Shape{3, 1, 2, 2}, Shape{3, 1, 4, 1}, Shape{3, 2, 2, 3},
                   Shape{5, 1, 2, 2}, Shape{7, 1, 2, 1}, Shape{3, 1, 3, 3}}) {
      const GBFunc f = random_func(rng, s.p, s.l, s.n, s.k);
      const Spectrum fast = wht_fast(f);
      t.add(fast.values == wht_naive(f).values && inverse_check(f, fast));
    }
  }
  return t;
}

GBFunc spread_322() {
  return spread_gbent(regular_spread(gf_make(3, 2)), default_balanced_map(3, 2, 2));
}

Tally suite_zpk_paths() {
  Tally t;
  std::mt19937_64 rng(102);
  for (int i = 0; i < 50; ++i) {
    const GBFunc f = random_func(rng, 3, 1, 2, 2);
    t.add(is_zpk_bent_by_definition(f) == is_zpk_bent_by_scaling(f));
  }
  const GBFunc s = spread_322();
  t.add(is_zpk_bent_by_definition(s) && is_zpk_bent_by_scaling(s));
  return t;
}

Tally suite_rds_agreement() {
  Tally t;
  const GroupSpec spec{3, 2, 2};
  const RdsParams params = RdsParams::for_graph(spec);
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::int64_t> d(0, 8);
  for (int i = 0; i < 50; ++i) {
    std::set<GroupElement> picked;
    while (picked.size() < 9) picked.insert({d(rng), d(rng)});
    const SubsetR r(spec, {picked.begin(), picked.end()});
    t.add(rds_bruteforce(r, params).rds == rds_characters(r, params));
  }
  const SubsetR g = graph_of(spread_322());
  const RdsParams gp = RdsParams::for_graph(g.spec());
  t.add(rds_bruteforce(g, gp).rds && rds_characters(g, gp));
  return t;
}

Tally suite_characterization() {
  Tally t;
  std::mt19937_64 rng(104);
  std::vector<GBFunc> inputs = {spread_322(), quadratic_gbent_lk(3, 2, 3, 1),
                                quadratic_gbent_lk(3, 1, 2, 2)};
  for (int i = 0; i < 50; ++i) inputs.push_back(random_func(rng, 3, 1, 2, 2));
  for (int i = 0; i < 20; ++i) inputs.push_back(random_func(rng, 3, 2, 1, 3));
  for (const GBFunc& f : inputs) {
    const bool gbent = is_gbent(f).gbent;
    for (const auto& spec : legal_component_specs(f)) {
      t.add(characterization_check(f, spec).holds == gbent);
    }
  }
  return t;
}

void run_selftest(Report& rep, Timer& timer) {
  Json suites = Json::object();
  int failed = 0;
  auto record = [&](const char* name, Tally (*suite)()) {
    const Tally t = suite();
    timer.lap(name);
    suites[name] = {{"passed", t.passed}, {"failed", t.failed}};
    failed += t.failed;
  };
  record("cyclotomic", suite_cyclotomic);
  record("transform", suite_transform);
  record("zpk_paths", suite_zpk_paths);
  record("rds_agreement", suite_rds_agreement);
  record("characterization", suite_characterization);
  rep.doc["selftest"] = std::move(suites);
  rep.doc["all_passed"] = failed == 0;
  if (failed != 0) rep.status = kExitFailed;
}

}  // namespace

Report run(const Request& request) {
  Report rep;
  Json timings = Json::object();
  Timer timer(request.timings ? &timings : nullptr);
  if (request.command != "selftest") {
    rep.doc["input"] = echo(need_input(request));
  }
  if (request.command == "analyze") {
    run_analyze(*request.input, rep, timer);
  } else if (request.command == "zpkbent") {
    run_zpkbent(*request.input, rep, timer);
  } else if (request.command == "characterize") {
    run_characterize(*request.input, request.spec, rep, timer);
  } else if (request.command == "rds") {
    run_rds(*request.input, rep, timer);
  } else if (request.command == "gray") {
    run_gray(*request.input, rep, timer);
  } else if (request.command == "selftest") {
    run_selftest(rep, timer);
  } else {
    throw std::invalid_argument("unknown command: " + request.command);
  }
  if (request.timings) rep.doc["timings"] = std::move(timings);
  return rep;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_plain(const Json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      emit_plain(child, path.empty() ? key : path + "." + key, out);
    }
    return;
  }
  if (v.is_array() &&
      std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      emit_plain(v[i], path + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out << path << ":";
  if (v.is_array()) {
    for (const auto& e : v) out << ' ' << scalar_text(e);
  } else {
    out << ' ' << scalar_text(v);
  }
  out << '\n';
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  if (format == Format::kJson) return report.doc.dump(2) + "\n";
  std::ostringstream out;
  emit_plain(report.doc, "", out);
  return out.str();
}

}  // namespace gbent::cli
