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


#include "gbent/rds.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gbent/cyclotomic.h"
#include "gbent/int_math.h"

namespace gbent {
namespace {

// x1 - x2 coordinatewise mod p, on packed indices.
std::int64_t sub_packed(std::int64_t a, std::int64_t b, std::int64_t p, int n) {
  std::int64_t out = 0;
  std::int64_t w = 1;
  for (int i = 0; i < n; ++i) {
    out += w * mod(a % p - b % p, p);
    a /= p;
    b /= p;
    w *= p;
  }
  return out;
}

std::int64_t dot_packed(std::int64_t a, std::int64_t b, std::int64_t p, int n) {
  std::int64_t acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += (a % p) * (b % p);
    a /= p;
    b /= p;
  }
  return acc % p;
}

}  // namespace

std::int64_t GroupSpec::x_size() const { return ipow(p, n); }
std::int64_t GroupSpec::y_size() const { return ipow(p, k); }
std::int64_t GroupSpec::group_order() const { return ipow(p, n + k); }

SubsetR::SubsetR(const GroupSpec& spec, std::vector<GroupElement> elements)
    : spec_(spec), elements_(std::move(elements)) {
  if (spec.p < 3 || !is_prime(spec.p) || spec.n < 1 || spec.k < 1) {
    throw std::invalid_argument("SubsetR: bad group");
  }
  for (const auto& e : elements_) {
    if (e.x < 0 || e.x >= spec.x_size() || e.y < 0 || e.y >= spec.y_size()) {
      throw std::invalid_argument("SubsetR: element outside the group");
    }
  }
  std::vector<GroupElement> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("SubsetR: duplicate element");
  }
}

RdsParams RdsParams::for_graph(const GroupSpec& spec) {
  if (spec.k > spec.n) {
    throw std::invalid_argument("RdsParams::for_graph: need k <= n");
  }
  const std::int64_t q = spec.x_size();
  return {q, spec.y_size(), q, ipow(spec.p, spec.n - spec.k)};
}

SubsetR graph_of(const GBFunc& f) {
  if (f.l() != 1) throw std::invalid_argument("graph_of: domain must be Z_p^n");
  std::vector<GroupElement> elems;
  elems.reserve(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    elems.push_back({static_cast<std::int64_t>(x), f[x]});
  }
  return SubsetR(GroupSpec{f.p(), f.n(), f.k()}, std::move(elems));
}

namespace {

void check_params(const SubsetR& r, const RdsParams& params) {
  const GroupSpec& spec = r.spec();
  if (params.u * params.v != spec.group_order() ||
      params.v != spec.y_size() ||
      params.kk != static_cast<std::int64_t>(r.size()) || params.lambda < 0) {
    throw std::invalid_argument(
        "rds: parameters inconsistent with the group or the subset");
  }
}

}  // namespace

RdsVerdict rds_bruteforce(const SubsetR& r, const RdsParams& params) {
  check_params(r, params);
  const GroupSpec& spec = r.spec();
  const std::int64_t ys = spec.y_size();
  std::vector<std::int64_t> mult(spec.group_order(), 0);
  for (const auto& a : r.elements()) {
    for (const auto& b : r.elements()) {
      const std::int64_t dx = sub_packed(a.x, b.x, spec.p, spec.n);
      const std::int64_t dy = mod(a.y - b.y, ys);
      ++mult[dx * ys + dy];
    }
  }
  for (std::int64_t g = 0; g < spec.group_order(); ++g) {
    const std::int64_t x = g / ys;
    const std::int64_t y = g % ys;
    std::int64_t expected = params.lambda;
    if (g == 0) {
      expected = params.kk;
    } else if (x == 0) {
      expected = 0;
    }
    if (mult[g] != expected) return {false, GroupElement{x, y}};
  }
  return {true, std::nullopt};
}

bool rds_characters(const SubsetR& r, const RdsParams& params) {
  check_params(r, params);
  const GroupSpec& spec = r.spec();
  const CycloParams cp(spec.p, spec.k);
  const std::int64_t to_p = cp.embed(1);
  const CycInt principal = CycInt::integer(cp, CycInt::Coeff(params.kk * params.kk));
  const CycInt trivial_on_n =
      CycInt::integer(cp, CycInt::Coeff(params.kk - params.lambda * params.v));
  const CycInt other = CycInt::integer(cp, CycInt::Coeff(params.kk));

  CycAccumulator acc(cp);
  for (std::int64_t u = 0; u < spec.x_size(); ++u) {
    for (std::int64_t a = 0; a < spec.y_size(); ++a) {
      acc.clear();
      for (const auto& e : r.elements()) {
        acc.add_root(a * e.y - dot_packed(u, e.x, spec.p, spec.n) * to_p);
      }
      const CycInt ns = norm_sq(acc.fold());
      const CycInt& expected =
          (u == 0 && a == 0) ? principal : (a == 0 ? trivial_on_n : other);
      if (!(ns == expected)) return false;
    }
  }
  return true;
}

bool rds_characters(const SubsetR& r) {
  return rds_characters(r, RdsParams::for_graph(r.spec()));
}

}  // namespace gbent
