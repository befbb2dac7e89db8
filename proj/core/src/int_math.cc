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

#include "gbent/int_math.h"

#include <numeric>
#include <stdexcept>

namespace gbent {

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw std::overflow_error("ipow: result exceeds int64");
    }
  }
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<std::int64_t> to_digits(std::int64_t value, std::int64_t radix,
                                    int count) {
  std::vector<std::int64_t> digits(count);
  for (int i = 0; i < count; ++i) {
    digits[i] = value % radix;
    value /= radix;
  }
  return digits;
}

std::int64_t from_digits(std::span<const std::int64_t> digits,
                         std::int64_t radix) {
  std::int64_t value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value = value * radix + *it;
  }
  return value;
}

}  // namespace gbent
