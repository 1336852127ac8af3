// Copyright 2026 The Authors.
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

#include "rforge/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rforge/errors.hpp"

namespace rforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string digits(s);
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (digits.size() == start ||
      !std::all_of(digits.begin() + static_cast<long>(start), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InputError("malformed rational: '" + std::string(whole) + "'");
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(s, text));
  mpz_class n = parse_integer(s.substr(0, slash), text);
  mpz_class d = parse_integer(s.substr(slash + 1), text);
  if (d == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  return Rat(n, d);
}

Rat Rat::dyadic(std::int64_t mantissa, int exp) {
  mpz_class m;
  mpz_set_si(m.get_mpz_t(), static_cast<long>(mantissa));
  mpz_class p2 = 1;
  mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), static_cast<mp_bitcnt_t>(exp < 0 ? -exp : exp));
  return exp >= 0 ? Rat(m * p2) : Rat(m, p2);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(int e) const {
  if (e < 0) return Rat(1) / pow(-e);
  Rat out(1);
  Rat base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Rat binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

LaurentQ::LaurentQ(const Rat& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

LaurentQ::LaurentQ(int min_exp, std::vector<Rat> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentQ LaurentQ::monomial(int e, const Rat& c) { return LaurentQ(e, {c}); }

void LaurentQ::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  min_exp_ += static_cast<int>(lead);
}

Rat LaurentQ::coeff(int e) const {
  if (is_zero() || e < min_exp_ || e > max_exp()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

Rat LaurentQ::eval(const Rat& q0) const {
  if (is_zero()) return Rat(0);
  if (q0.is_zero()) {
    if (min_exp_ < 0) throw InputError("Laurent evaluation at q = 0 with negative exponent");
    return coeff(0);
  }
  // Horner over the dense span, then shift.
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  return acc * q0.pow(min_exp_);
}

LaurentQ LaurentQ::div_one_minus_q() const {
  if (is_zero()) return {};
  // p = (1 - q) * s. Solve from the low end: s_i = p_i + s_{i-1}.
  std::vector<Rat> s(coeffs_.size() - 1 > 0 ? coeffs_.size() - 1 : 0);
  Rat carry(0);
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    carry += coeffs_[i];
    s[i] = carry;
  }
  // Remainder check: the top coefficient must equal -s_{n-2}.
  Rat top = coeffs_.back();
  Rat expect = coeffs_.size() >= 2 ? -s.back() : Rat(0);
  if (top != expect) throw InternalError("Laurent polynomial not divisible by (1 - q): " + str());
  return LaurentQ(min_exp_, std::move(s));
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<Rat> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(min_exp_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(o.min_exp_ - lo)] += o.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentQ();
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  min_exp_ += o.min_exp_;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

std::string LaurentQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c.is_zero()) continue;
    int e = min_exp_ + static_cast<int>(i);
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = c.sign() < 0 ? -c : c;
    if (e == 0) os << a;
    else {
      if (a != Rat(1)) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace rforge
