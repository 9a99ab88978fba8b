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

#ifndef ABELCOUNT_INT_POLY_HPP_
#define ABELCOUNT_INT_POLY_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "abelcount/natural.hpp"

namespace abelcount {

// Integer-coefficient polynomial in the formal variable p. Coefficients are
// stored by ascending power with no trailing zeros; the zero polynomial has no
// coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, unsigned power);
  // p^k - 1
  static IntPoly p_power_minus_one(unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  // Zero beyond the degree.
  Integer coeff(std::size_t power) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& p) const;
  bool has_nonnegative_coefficients() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Multiplies by p^k.
  IntPoly shifted(unsigned k) const;

  // Synthetic division that must be exact; throws InternalError when the
  // remainder is nonzero or the quotient is not integral.
  IntPoly exact_div(const IntPoly& divisor) const;

  // Ascending powers, e.g. "5 + 3*p + 4*p^2 + 3*p^3 + p^4"; "0" for zero.
  std::string to_string() const;
  // Inverse of to_string (also accepts terms in any order, repeated powers
  // summed). Throws DomainError on malformed text.
  static IntPoly parse(std::string_view text);

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

}  // namespace abelcount

#endif  // ABELCOUNT_INT_POLY_HPP_
