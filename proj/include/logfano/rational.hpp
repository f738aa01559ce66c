/*
 * Copyright 2026 The logfano Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOGFANO_RATIONAL_HPP
#define LOGFANO_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace logfano {

// boost::rational keeps values normalized: lowest terms, positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including integers ("0/1", "-3/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::int64_t floor_of(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r.numerator() < 0) ? q - 1 : q;
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

}  // namespace logfano

#endif  // LOGFANO_RATIONAL_HPP
