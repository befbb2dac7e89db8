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


// Relative difference sets in G = Z_p^n x Z_{p^k} relative to
// N = {0} x Z_{p^k}. Elements are pairs (index of x, y) with x packed in
// mixed radix p like GBFunc tables.

#ifndef GBENT_RDS_H_
#define GBENT_RDS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gbent/func.h"

namespace gbent {

struct GroupSpec {
  int p = 3;
  int n = 1;
  int k = 1;

  std::int64_t x_size() const;      // p^n
  std::int64_t y_size() const;      // p^k = |N|
  std::int64_t group_order() const;  // p^(n+k)
};

struct GroupElement {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A list of distinct group elements.
class SubsetR {
 public:
  // Throws std::invalid_argument on duplicates or elements outside G.
  SubsetR(const GroupSpec& spec, std::vector<GroupElement> elements);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
};

// (u, v, k, lambda) with u v = |G| and k = |R|.
struct RdsParams {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t kk = 0;
  std::int64_t lambda = 0;

  // (p^n, p^k, p^n, p^(n-k)); requires k <= n.
  static RdsParams for_graph(const GroupSpec& spec);
  friend bool operator==(const RdsParams&, const RdsParams&) = default;
};

struct RdsVerdict {
  bool rds = false;
  std::optional<GroupElement> witness;  // first element with a wrong count
};

// {(x, f(x))}. Requires l = 1.
SubsetR graph_of(const GBFunc& f);

// Counts all ordered differences r1 - r2. Throws std::invalid_argument if
// the parameters do not match the group and the subset.
RdsVerdict rds_bruteforce(const SubsetR& r, const RdsParams& params);

// |chi(R)|^2 against k^2 (principal), k - lambda v (trivial on N only) and
// k (nontrivial on N), for chi_{u,a}(x, y) = zeta_p^(-u.x) zeta_{p^k}^(a y).
bool rds_characters(const SubsetR& r, const RdsParams& params);

// Same with RdsParams::for_graph(r.spec()).
bool rds_characters(const SubsetR& r);

}  // namespace gbent

#endif  // GBENT_RDS_H_
