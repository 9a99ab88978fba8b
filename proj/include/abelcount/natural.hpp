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

#ifndef ABELCOUNT_NATURAL_HPP_
#define ABELCOUNT_NATURAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace abelcount {

// Arbitrary-precision integers. `Natural` is used where the value is known to
// be non-negative, `Integer` where a sign is possible (polynomial coefficients).
using Natural = mpz_class;
using Integer = mpz_class;

inline Natural to_natural(std::uint64_t v) {
  Natural r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline bool fits_u64(const Natural& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

// Throws DomainError if `v` is negative or wider than 64 bits.
std::uint64_t to_u64(const Natural& v);

inline Natural from_u128(unsigned __int128 v) {
  Natural hi = to_natural(static_cast<std::uint64_t>(v >> 64));
  Natural lo = to_natural(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

// Parses a non-negative decimal integer; throws DomainError on malformed input.
Natural parse_natural(std::string_view text);

inline std::string to_string(const mpz_class& v) { return v.get_str(); }

}  // namespace abelcount

#endif  // ABELCOUNT_NATURAL_HPP_
