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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gbent/analysis.h"
#include "gbent/constructions.h"
#include "gbent/cyclotomic.h"
#include "gbent/rds.h"
#include "gbent/transform.h"
#include "test_support.h"

namespace gbent {
namespace {

using testing::random_func;

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<std::vector<std::int64_t>> vectors(std::int64_t radix, int dims) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t i = 0; i < ipow(radix, dims); ++i) {
    out.push_back(to_digits(i, radix, dims));
  }
  return out;
}

void criterion1(Check& c) {
  struct Ptk { int p, t, k; };
  for (auto [p, t, k] : {Ptk{3, 1, 2}, Ptk{3, 1, 3}, Ptk{3, 2, 3}, Ptk{5, 1, 2}}) {
    const CycloParams params(p, k);
    for (std::int64_t a = 0; a < ipow(p, t); ++a) {
      c.expect(digit_identity_check(a, t, params),
               "digit identity p=" + std::to_string(p) + " t=" +
                   std::to_string(t) + " k=" + std::to_string(k) +
                   " a=" + std::to_string(a));
    }
  }
  struct Ptlk { int p, t, l, k; };
  for (auto [p, t, l, k] :
       {Ptlk{3, 1, 2, 2}, Ptlk{3, 1, 3, 3}, Ptlk{5, 1, 2, 2}}) {
    const CycloParams params(p, k);
    for (const auto& v : vectors(ipow(p, t), l - 1)) {
      const std::string tag = "p=" + std::to_string(p) + " l=" +
                              std::to_string(l) + " k=" + std::to_string(k);
      c.expect(gamma_product_form(v, t, l, params) == gamma(v, t, l, params),
               "gamma product form " + tag);
      c.expect(gamma_inversion_check(v, t, l, params), "gamma inversion " + tag);
    }
  }
  for (int p : {3, 5, 7}) {
    const CycloParams params(p, 1);
    const CycInt g = gauss_sum(params);
    const std::int64_t expected = ((p - 1) / 2) % 2 == 0 ? p : -p;
    c.expect(g * g == CycInt::integer(params, CycInt::Coeff(expected)),
             "gauss sum squared p=" + std::to_string(p));
  }
}

void criterion2(Check& c) {
  struct Shape { int p, l, n, k; };
  const std::vector<Shape> shapes = {
      {3, 1, 1, 1}, {3, 1, 2, 1}, {3, 1, 2, 2}, {3, 1, 3, 3}, {3, 1, 6, 1},
      {3, 2, 1, 2}, {3, 2, 2, 3}, {3, 2, 3, 2}, {3, 3, 2, 3}, {5, 1, 2, 2},
      {5, 1, 4, 1}, {5, 2, 2, 2}, {7, 1, 3, 1}, {7, 1, 2, 2}, {3, 1, 4, 4}};
  std::mt19937_64 rng(2);
  int count = 0;
  for (int round = 0; count < 210; ++round) {
    for (const auto& s : shapes) {
      const GBFunc f = random_func(rng, s.p, s.l, s.n, s.k);
      const Spectrum fast = wht_fast(f);
      const Spectrum naive = wht_naive(f);
      const std::string tag = "shape (" + std::to_string(s.p) + "," +
                              std::to_string(s.l) + "," + std::to_string(s.n) +
                              "," + std::to_string(s.k) + ") round " +
                              std::to_string(round);
      c.expect(fast.values == naive.values, "fast != naive " + tag);
      c.expect(inverse_check(f, fast), "inverse check " + tag);
      ++count;
    }
  }
}

GBFunc spread_322() {
  return spread_gbent(regular_spread(gf_make(3, 2)), default_balanced_map(3, 2, 2));
}

void criterion3(Check& c) {
  const GBFunc f = spread_322();
  c.expect(is_gbent(f).gbent, "is_gbent");
  c.expect(is_zpk_bent_by_definition(f), "zpk bent by definition");
  c.expect(is_zpk_bent_by_scaling(f), "zpk bent by scaling");
  const SubsetR r = graph_of(f);
  const RdsParams params = RdsParams::for_graph(r.spec());
  c.expect(params == RdsParams{81, 9, 81, 9}, "rds parameters");
  c.expect(rds_bruteforce(r, params).rds, "rds brute force");
  c.expect(rds_characters(r, params), "rds characters");
  const Digits digits = digit_decompose(f, 1);
  c.expect(is_vectorial_bent(digits.blocks), "vectorial bent digits");
  c.expect(verify_dual_formula(f), "dual formula");
  const auto order = plateaued_order(gray_image(f));
  c.expect(verify_gray_plateaued(f) && order && order->s == 1,
           "gray image plateaued with s = 1");
}

int checks_run = 0;

void agree_all_modes(Check& c, const GBFunc& f, const std::string& tag,
                     bool mode_d_only = false) {
  const bool expected = is_gbent(f).gbent;
  for (const auto& spec : legal_component_specs(f)) {
    if (mode_d_only != (spec.mode == ComponentMode::kD)) continue;
    ++checks_run;
    const bool got = characterization_check(f, spec).holds;
    if (got != expected) {
      c.expect(false, tag + ": mode " +
                          std::to_string(static_cast<int>(spec.mode)) + " t=" +
                          std::to_string(spec.t) + " s=" +
                          std::to_string(spec.s) + " disagrees");
    }
  }
}

void criterion4(Check& c) {
  int gbent_inputs = 0;
  int idx = 0;
  for (const GBFunc& g : testing::all_pary(3, 1)) {
    const GBFunc f = lift_bent(g, 2);
    gbent_inputs += is_gbent(f).gbent;
    agree_all_modes(c, f, "lift #" + std::to_string(idx++));
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const GBFunc f = random_func(rng, 3, 1, 2, 2);
    gbent_inputs += is_gbent(f).gbent;
    agree_all_modes(c, f, "random #" + std::to_string(i));
  }
  const std::vector<std::pair<std::string, GBFunc>> witnesses = {
      {"spread(3,2,2)", spread_322()},
      {"spread(3,2,1)", spread_gbent(regular_spread(gf_make(3, 2)),
                                     default_balanced_map(3, 2, 1))},
      {"lift x1x2", lift_bent(testing::x1x2(3), 2)},
      {"lift sum squares", lift_bent(testing::sum_squares(3, 2), 2)},
      {"quadratic (3,1,2,2)", quadratic_gbent_lk(3, 1, 2, 2)},
  };
  for (const auto& [name, f] : witnesses) {
    c.expect(is_gbent(f).gbent, name + " is not gbent");
    agree_all_modes(c, f, name);
  }
  c.expect(gbent_inputs > 0, "suite contains no gbent lift");
  c.note = std::to_string(checks_run) + " characterization checks, " +
           std::to_string(gbent_inputs) + " gbent inputs besides witnesses";
  checks_run = 0;
}

void criterion5(Check& c) {
  const GBFunc w = quadratic_gbent_lk(3, 2, 3, 1);
  const Spectrum naive = wht_naive(w);
  c.expect(is_gbent(naive).gbent, "quadratic (3,2,3,1) not gbent by brute force");
  agree_all_modes(c, w, "quadratic (3,2,3,1)", true);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    agree_all_modes(c, random_func(rng, 3, 2, 1, 3),
                    "random Z_9 -> Z_27 #" + std::to_string(i), true);
  }
  c.note = std::to_string(checks_run) + " mode D checks";
  checks_run = 0;
}

void criterion6(Check& c) {
  c.expect(!is_gbent(GBFunc::zero(3, 1, 2, 2)).gbent, "zero function is gbent");
  const GBFunc f = lift_bent(testing::x1x2(3), 2);
  c.expect(is_gbent(f).gbent, "lift of x1x2 is not gbent");
  c.expect(!is_zpk_bent_by_definition(f), "lift of x1x2 is Z_9-bent (definition)");
  c.expect(!is_zpk_bent_by_scaling(f), "lift of x1x2 is Z_9-bent (scaling)");
  const SubsetR r = graph_of(f);
  const RdsParams params = RdsParams::for_graph(r.spec());
  c.expect(!rds_bruteforce(r, params).rds, "lift of x1x2 passes rds brute force");
  c.expect(!rds_characters(r, params), "lift of x1x2 passes rds characters");
}

void criterion7(Check& c) {
  const GroupSpec spec{3, 2, 2};
  const RdsParams params = RdsParams::for_graph(spec);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dx(0, spec.x_size() - 1);
  std::uniform_int_distribution<std::int64_t> dy(0, spec.y_size() - 1);
  for (int i = 0; i < 60; ++i) {
    std::set<GroupElement> picked;
    while (picked.size() < 9) picked.insert({dx(rng), dy(rng)});
    const SubsetR r(spec, {picked.begin(), picked.end()});
    c.expect(rds_bruteforce(r, params).rds == rds_characters(r, params),
             "random subset #" + std::to_string(i));
  }
  const std::vector<GBFunc> graphs = {
      spread_322(),
      spread_gbent(regular_spread(gf_make(3, 2)), default_balanced_map(3, 2, 1)),
      lift_bent(testing::x1x2(3), 2),
      lift_bent(testing::sum_squares(3, 2), 2),
      testing::x1x2(3),
      quadratic_gbent_lk(3, 1, 2, 2),
      GBFunc::zero(3, 1, 2, 2),
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const SubsetR r = graph_of(graphs[i]);
    const RdsParams gp = RdsParams::for_graph(r.spec());
    c.expect(rds_bruteforce(r, gp).rds == rds_characters(r, gp),
             "constructed graph #" + std::to_string(i));
  }
}

}  // namespace
}  // namespace gbent

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(gbent::Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cyclotomic identities", 10, gbent::criterion1},
      {2, "fast transform matches naive transform", 120, gbent::criterion2},
      {3, "spread function pipeline (3,2,2)", 300, gbent::criterion3},
      {4, "component characterizations A/B/C agree with gbent", 600,
       gbent::criterion4},
      {5, "mixed-ring witness and mode D agreement", 120, gbent::criterion5},
      {6, "negative controls", 30, gbent::criterion6},
      {7, "difference set checks agree", 60, gbent::criterion7},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    gbent::Check check;
    const auto start = Clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > cr.budget_s) {
      check.failures.push_back("over time budget of " +
                               std::to_string(cr.budget_s) + " s");
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s  (%.2f s)\n", cr.id, ok ? "PASS" : "FAIL",
                cr.title, secs);
    if (!check.note.empty()) std::printf("    %s\n", check.note.c_str());
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i) {
      std::printf("    %s\n", check.failures[i].c_str());
    }
    if (check.failures.size() > 10) {
      std::printf("    ... %zu more\n", check.failures.size() - 10);
    }
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
