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


#include "rforge/sequences.hpp"

#include <algorithm>
#include <cctype>

#include "rforge/errors.hpp"

namespace rforge {

Seq::Seq(std::vector<Rat> values, std::optional<int> ambient, int s)
    : offset(s), entries(std::move(values)), m(ambient) {}

Rat Seq::at(int k) const {
  if (k < first() || k > last()) return Rat(0);
  return entries[static_cast<std::size_t>(k - offset)];
}

std::string condition_name(Condition c) { return "a" + std::to_string(static_cast<int>(c)); }

Condition parse_condition(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != '-' && !std::isspace(static_cast<unsigned char>(ch))) t.push_back(static_cast<char>(std::tolower(ch)));
  if (t.size() == 2 && t[0] == 'a' && t[1] >= '0' && t[1] <= '6') return static_cast<Condition>(t[1] - '0');
  throw InputError("unknown condition '" + std::string(text) + "' (expected a0..a6)");
}

namespace {

ConditionResult fail(int k, std::string detail) { return {false, k, std::move(detail)}; }

ConditionResult log_concave(const std::vector<Rat>& b, int s) {
  for (std::size_t i = 1; i + 1 < b.size(); ++i)
    if (b[i] * b[i] < b[i - 1] * b[i + 1]) {
      int k = s + static_cast<int>(i);
      return fail(k, "b_k^2 < b_(k-1) b_(k+1) at k=" + std::to_string(k));
    }
  return {};
}

std::vector<Rat> weighted(const Seq& a, Rat (*w)(int, int), int param) {
  std::vector<Rat> out;
  for (int k = a.first(); k <= a.last(); ++k) out.push_back(a.at(k) * w(k, param));
  return out;
}

}  // namespace

ConditionResult check_condition(const Seq& a, Condition cond) {
  if (a.entries.empty()) throw InputError("empty sequence");
  if (a.offset < 0) throw InputError("sequence offset must be nonnegative");
  for (const auto& v : a.entries)
    if (v.sign() < 0) throw InputError("sequence entries must be nonnegative");
  const int s = a.first(), r = a.last();

  switch (cond) {
    case Condition::A0: {
      int lo = -1, hi = -1;
      for (int k = s; k <= r; ++k)
        if (!a.at(k).is_zero()) {
          if (lo < 0) lo = k;
          hi = k;
        }
      for (int k = lo + 1; lo >= 0 && k < hi; ++k)
        if (a.at(k).is_zero()) return fail(k, "internal zero at k=" + std::to_string(k));
      return {};
    }
    case Condition::A1: {
      int k = s;
      while (k < r && a.at(k) <= a.at(k + 1)) ++k;
      for (; k < r; ++k)
        if (a.at(k + 1) > a.at(k)) return fail(k + 1, "increase after the peak at k=" + std::to_string(k + 1));
      return {};
    }
    case Condition::A2:
      return log_concave(a.entries, s);
    case Condition::A3:
      return log_concave(weighted(a, [](int k, int) { return factorial(k); }, 0), s);
    case Condition::A4: {
      if (!a.m) throw InputError("condition a4 needs the ambient size m");
      if (*a.m < r) throw InputError("ambient size m is smaller than the last index");
      return log_concave(weighted(a, [](int k, int m) { return Rat(1) / binomial(m, k); }, *a.m), s);
    }
    case Condition::A5:
      return log_concave(weighted(a, [](int k, int rr) { return Rat(1) / binomial(rr, k); }, r), s);
    case Condition::A6: {
      std::vector<Rat> c(static_cast<std::size_t>(r) + 1, Rat(0));
      for (int k = s; k <= r; ++k) c[static_cast<std::size_t>(k)] = a.at(k);
      IntPoly p(std::move(c));
      if (p.is_zero()) return {};
      if (!real_nonpositive_rooted(p)) return {false, std::nullopt, "polynomial has a non-real or positive root"};
      return {};
    }
  }
  throw InternalError("unhandled condition");
}

// ------------------------------------------------------------------ IntPoly

IntPoly::IntPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat IntPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return IntPoly(std::move(d));
}

int IntPoly::sign_at_infinity(int dir) const {
  if (is_zero()) return 0;
  int s = lead().sign();
  return (dir < 0 && degree() % 2 == 1) ? -s : s;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, Rat(0));
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    Rat f = rem[i] / b.lead();
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  while (!b.is_zero()) {
    IntPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rat l = a.lead();
  for (auto& c : a.c_) c /= l;
  return a;
}

namespace {

IntPoly square_free(const IntPoly& p) { return IntPoly::divmod(p, IntPoly::gcd(p, p.derivative())).first; }

int variations(const std::vector<IntPoly>& chain, const std::optional<Rat>& x, int dir) {
  int prev = 0, count = 0;
  for (const auto& q : chain) {
    int s = x ? q.eval(*x).sign() : q.sign_at_infinity(dir);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_real_roots(const IntPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  if (p.is_zero()) throw InputError("Sturm count of the zero polynomial");
  if (lo && hi && *hi < *lo) return 0;
  IntPoly sq = square_free(p);
  std::vector<IntPoly> chain{sq, sq.derivative()};
  while (!chain.back().is_zero()) chain.push_back(-IntPoly::divmod(chain[chain.size() - 2], chain.back()).second);
  chain.pop_back();
  return variations(chain, lo, -1) - variations(chain, hi, +1);
}

bool real_nonpositive_rooted(const IntPoly& p) {
  if (p.is_zero()) throw InputError("real-rootedness of the zero polynomial");
  IntPoly sq = square_free(p);
  return sturm_real_roots(sq, std::nullopt, Rat(0)) == sq.degree();
}

// -------------------------------------------------------------- convolution

ConvolutionIdentity convolution_identity(const Seq& a, const Seq& b, int n) {
  if (n < 1) throw InputError("convolution identity needs n >= 1");
  const int kmax = std::max(b.last(), 0);
  auto c = [&](int idx) {
    Rat s(0);
    for (int k = 0; k <= kmax; ++k) s += a.at(idx + k) * b.at(k);
    return s;
  };
  ConvolutionIdentity out;
  out.lhs = c(n) * c(n) - c(n - 1) * c(n + 1);
  for (int k = 0; k <= kmax; ++k)
    for (int j = 0; j <= k; ++j)
      out.rhs += (a.at(n + j) * a.at(n + k) - a.at(n + j - 1) * a.at(n + k + 1)) *
                 (b.at(j) * b.at(k) - b.at(j - 1) * b.at(k + 1));
  out.equal = out.lhs == out.rhs;
  return out;
}

Seq convolve(const Seq& a, const Seq& b) {
  const int top = std::max(a.last() - b.first(), 0);
  std::vector<Rat> c;
  for (int n = 0; n <= top; ++n) {
    Rat s(0);
    for (int k = b.first(); k <= b.last(); ++k) s += a.at(n + k) * b.at(k);
    c.push_back(s);
  }
  return Seq(std::move(c));
}

// ------------------------------------------------------------------- Mason

bool MasonReport::all_pass() const {
  for (const auto& [name, res] : independent)
    if (!res.holds && name != "I5") return false;
  return h_logconcave.holds;
}

MasonReport mason_report(const Matroid& mat) {
  MasonReport rep;
  rep.seqs = invariant_sequences(mat);
  rep.m = mat.size();
  rep.r = mat.rank();
  Seq iseq(rep.seqs.independent, rep.m);
  for (Condition c : {Condition::A0, Condition::A1, Condition::A2, Condition::A3, Condition::A4, Condition::A5}) {
    std::string name = condition_name(c);
    name[0] = 'I';
    rep.independent.emplace_back(name, check_condition(iseq, c));
  }

  const auto& h = rep.seqs.h;
  for (const auto& v : h) rep.h_integral = rep.h_integral && v.is_integer();
  auto neg = std::find_if(h.begin(), h.end(), [](const Rat& v) { return v.sign() < 0; });
  if (neg != h.end()) {
    int k = static_cast<int>(neg - h.begin());
    rep.h_logconcave = {false, k, "negative h_k at k=" + std::to_string(k)};
  } else {
    Seq hs(h, rep.m);
    auto lc = check_condition(hs, Condition::A2);
    rep.h_logconcave = lc.holds ? check_condition(hs, Condition::A0) : lc;
  }
  for (std::size_t k = 1; k < h.size(); ++k) {
    int kk = static_cast<int>(k);
    if (h[k] / binomial(rep.m, kk) > h[k - 1] / binomial(rep.m, kk - 1)) {
      rep.h_normalized_nonincreasing = {false, kk, "h_k/C(m,k) increases at k=" + std::to_string(kk)};
      break;
    }
  }
  return rep;
}

}  // namespace rforge
