// Copyright 2026 The abelcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abelcount/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "abelcount/errors.hpp"

namespace abelcount {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, unsigned power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::p_power_minus_one(unsigned k) {
  return monomial(1, k) - constant(1);
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Integer IntPoly::evaluate(const Integer& p) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

bool IntPoly::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly IntPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("polynomial division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw InternalError("inexact polynomial division: " + to_string() + " by " +
                        divisor.to_string());
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size();
  std::vector<Integer> quot(rem.size() - dn + 1);
  const Integer& lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dn - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw InternalError("non-integral quotient dividing " + to_string() + " by " +
                          divisor.to_string());
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), divisor.coeffs_[j].get_mpz_t());
    }
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i + 1 < dn; ++i) {
    if (sgn(rem[i]) != 0) {
      throw InternalError("nonzero remainder dividing " + to_string() + " by " +
                          divisor.to_string());
    }
  }
  return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "p";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw DomainError("empty polynomial text");
  std::map<unsigned, Integer> terms;
  std::size_t i = 0;
  auto fail = [&]() -> IntPoly {
    throw DomainError("malformed polynomial '" + std::string(text) + "'");
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      return fail();
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = start == i ? Integer(1) : Integer(s.substr(start, i - start), 10);
    unsigned pw = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'p')) {
      if (s[i] == '*') {
        if (start == i) return fail();
        ++i;
      }
      if (i >= s.size() || s[i] != 'p') return fail();
      ++i;
      pw = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e0 == i) return fail();
        pw = static_cast<unsigned>(std::stoul(s.substr(e0, i - e0)));
      }
    } else if (start == i) {
      return fail();
    }
    terms[pw] += sign * c;
  }
  std::vector<Integer> v(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [pw, c] : terms) v[pw] = c;
  return IntPoly(std::move(v));
}

}  // namespace abelcount
