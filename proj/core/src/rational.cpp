// Copyright 2026 The hcover Authors
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

#include "hcover/rational.hpp"

#include <cstdint>

namespace hcover {

double to_double(const Rational& q) {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (abs(num) < kExact && den < kExact) {
    return static_cast<double>(num.convert_to<std::int64_t>()) /
           static_cast<double>(den.convert_to<std::int64_t>());
  }
  return q.convert_to<double>();
}

std::string to_string(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

}  // namespace hcover
