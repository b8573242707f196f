/*
 * Copyright 2026 The ghnets Authors
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

#include "ghnets/scalar.hpp"

#include <cctype>
#include <ostream>

#include "ghnets/errors.hpp"

namespace ghnets {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError(std::string(whole), "not a rational literal");
  }
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Scalar::Scalar(long long v) {
  // mpq_class has no long long constructor on LP64 glibc builds of gmpxx.
  q_ = mpq_class(mpz_class(std::to_string(v), 10));
}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw DomainError("Scalar: zero denominator");
  q_ = mpq_class(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  q_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.q_ == 0) throw DomainError("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError(std::string(whole), "empty rational literal");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError(std::string(whole), "bad denominator");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError(std::string(whole), "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool neg = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      neg = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError(std::string(whole), "not a decimal literal");
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    mpq_class q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }

  return Scalar(mpq_class(parse_integer(text, whole)));
}

std::string Scalar::to_string() const { return q_.get_str(10); }

std::string Scalar::to_decimal(int digits) const {
  // Round half away from zero at the requested number of digits.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = abs(q_) * scale + mpq_class(1, 2);
  mpz_class rounded = scaled.get_num() / scaled.get_den();
  std::string body = rounded.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool zero = rounded == 0;
  return (q_ < 0 && !zero ? "-" : "") + body;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ghnets
