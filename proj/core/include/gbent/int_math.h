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

#ifndef GBENT_INT_MATH_H_
#define GBENT_INT_MATH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace gbent {

// base^exp, throwing std::overflow_error if the result leaves int64.
std::int64_t ipow(std::int64_t base, int exp);

bool is_prime(std::int64_t n);

// Least non-negative residue.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Mixed-radix helpers with the first digit least significant.
std::vector<std::int64_t> to_digits(std::int64_t value, std::int64_t radix,
                                    int count);
std::int64_t from_digits(std::span<const std::int64_t> digits,
                         std::int64_t radix);

}  // namespace gbent

#endif  // GBENT_INT_MATH_H_
