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

// Exact scalars: arbitrary-precision rationals and Laurent polynomials in a
// single formal parameter q with rational coefficients.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rforge {

/// Canonical rational p/q with q > 0 and gcd(|p|, q) = 1.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpz_class& num) : v_(num) {}
  Rat(const mpz_class& num, const mpz_class& den);

  /// Accepts "p/q", "p", or "-p/q" with optional surrounding whitespace.
  static Rat parse(std::string_view text);
  /// Exact value m * 2^exp.
  static Rat dyadic(std::int64_t mantissa, int exp);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  /// Throws InputError on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  Rat pow(int e) const;

 private:
  mpq_class v_;
};

Rat binomial(int n, int k);
Rat factorial(int n);

/// Laurent polynomial sum_i coeffs[i] q^(min_exp + i). Dense over the
/// exponent span; canonical form has nonzero first and last coefficients,
/// and the zero value has no coefficients and min_exp 0.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(const Rat& c);  // NOLINT(google-explicit-constructor)
  LaurentQ(int c) : LaurentQ(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentQ(int min_exp, std::vector<Rat> coeffs);

  /// c * q^e
  static LaurentQ monomial(int e, const Rat& c = Rat(1));

  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int e) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Substitute q = q0. Throws InputError if q0 = 0 and a negative power is present.
  Rat eval(const Rat& q0) const;

  /// Exact quotient by (1 - q). Throws InternalError on nonzero remainder.
  LaurentQ div_one_minus_q() const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(LaurentQ a, const LaurentQ& b) { return a *= b; }
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentQ& l) { return os << l.str(); }

 private:
  void normalize();

  int min_exp_ = 0;
  std::vector<Rat> coeffs_;
};

}  // namespace rforge
