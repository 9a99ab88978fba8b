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

#ifndef ABELCOUNT_ENUMERATE_HPP_
#define ABELCOUNT_ENUMERATE_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "abelcount/group.hpp"
#include "abelcount/natural.hpp"

namespace abelcount {

// Explicit element tuples; each coordinate reduced modulo its cyclic factor.
using Element = std::vector<std::uint64_t>;
using ElementSet = std::vector<Element>;  // sorted lexicographically

// Goursat key (a, b, c, d, l) of a subgroup of Z_m x Z_n.
struct Subgroup2Key {
  Natural m, n;
  Natural a, b, c, d, l;

  // Throws DomainError unless the key lies in J_{m,n}.
  void validate() const;
  std::string to_string() const;  // "a b c d l"

  friend bool operator==(const Subgroup2Key&, const Subgroup2Key&) = default;
};

Subgroup2Key make_subgroup2_key(const Natural& m, const Natural& n, const Natural& a,
                                const Natural& b, const Natural& c, const Natural& d,
                                const Natural& l);

// Lazy lexicographic stream over J_{m,n}.
class Subgroup2Stream {
 public:
  Subgroup2Stream(const Natural& m, const Natural& n);
  std::optional<Subgroup2Key> next();

 private:
  void refill();

  Natural m_, n_;
  std::vector<Natural> div_m_, div_n_;
  std::vector<Natural> div_a_;
  std::size_t ia_ = 0, ib_ = 0, ic_ = 0;
  bool done_ = false;
  std::deque<Subgroup2Key> pending_;
};

std::vector<Subgroup2Key> list_subgroups_2(const Natural& m, const Natural& n);

struct Classification {
  Natural order;
  Natural exponent;
  bool cyclic = false;
  IsoType isotype;
};

ElementSet materialize_2(const Subgroup2Key& key);
Classification classify_2(const Subgroup2Key& key);
IsoType quotient_2(const Subgroup2Key& key);

// Sextuple (a, b, c, t, w, z) of a subgroup of Z_m x Z_n x Z_r with the
// derived quantities of the construction cached.
struct Subgroup3Key {
  Natural m, n, r;
  Natural a, b, c, t, w, z;
  Natural big_a, big_b, big_c, x;
  Natural s, v, u;

  Natural order() const;
  std::string to_string() const;  // "a b c t w z"

  friend bool operator==(const Subgroup3Key&, const Subgroup3Key&) = default;
};

// Builds and validates a key from the six free parameters.
Subgroup3Key make_subgroup3_key(const Natural& m, const Natural& n, const Natural& r,
                                const Natural& a, const Natural& b, const Natural& c,
                                const Natural& t, const Natural& w, const Natural& z);

class Subgroup3Stream {
 public:
  Subgroup3Stream(const Natural& m, const Natural& n, const Natural& r);
  std::optional<Subgroup3Key> next();

 private:
  void refill();

  Natural m_, n_, r_;
  std::vector<Natural> div_m_, div_n_, div_r_;
  std::size_t ia_ = 0, ib_ = 0, ic_ = 0;
  bool done_ = false;
  std::deque<Subgroup3Key> pending_;
};

std::vector<Subgroup3Key> list_subgroups_3(const Natural& m, const Natural& n,
                                           const Natural& r);

ElementSet materialize_3(const Subgroup3Key& key);

// One "(x,y)" or "(x,y,z)" per line, each line newline-terminated.
std::string render_elements(const ElementSet& elements);

// Least non-negative u with a*u = b (mod m); nullopt if unsolvable.
std::optional<Natural> solve_linear_congruence(const Natural& a, const Natural& b,
                                               const Natural& m);

}  // namespace abelcount

#endif  // ABELCOUNT_ENUMERATE_HPP_
