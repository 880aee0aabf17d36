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

#ifndef HCOVER_RATIONAL_HPP_
#define HCOVER_RATIONAL_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcover {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Correctly rounded when numerator and denominator are below 2^53, which
// covers every cell measure this library produces in practice.
double to_double(const Rational& q);

std::string to_string(const Rational& q);

}  // namespace hcover

#endif  // HCOVER_RATIONAL_HPP_
