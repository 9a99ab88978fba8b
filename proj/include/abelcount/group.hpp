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

#ifndef ABELCOUNT_GROUP_HPP_
#define ABELCOUNT_GROUP_HPP_

#include <compare>
#include <string>
#include <vector>

#include "abelcount/natural.hpp"
#include "abelcount/partition.hpp"

namespace abelcount {

// Invariant factors d_1 | d_2 | ... | d_r with every d_i >= 2; empty for the
// trivial group.
class IsoType {
 public:
  IsoType() = default;
  // Throws DomainError if a factor is < 2 or the divisibility chain breaks.
  explicit IsoType(std::vector<Natural> factors);
  // Z_A x Z_B with A | B; unit factors are dropped.
  static IsoType of_pair(const Natural& a, const Natural& b);

  const std::vector<Natural>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Natural order() const;
  // Largest invariant factor (1 for the trivial group).
  Natural exponent() const;
  bool is_cyclic() const { return factors_.size() <= 1; }

  // "Z_2 x Z_18"; "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const IsoType&, const IsoType&) = default;
  friend bool operator<(const IsoType& a, const IsoType& b) { return a.factors_ < b.factors_; }

 private:
  std::vector<Natural> factors_;
};

struct PrimaryComponent {
  Natural prime;
  // Exponent of `prime` in each modulus, in the modulus order given.
  std::vector<unsigned> exponents;
  Partition type() const { return Partition::from_exponents(exponents); }
};

// Z_{n_1} x ... x Z_{n_k}.
class GroupSpec {
 public:
  // Throws DomainError if empty or any modulus is 0.
  explicit GroupSpec(std::vector<Natural> moduli);
  GroupSpec(std::initializer_list<unsigned long> moduli);

  const std::vector<Natural>& moduli() const { return moduli_; }
  std::size_t arity() const { return moduli_.size(); }
  Natural order() const;
  Natural exponent() const;

  // One entry per prime dividing the order, increasing.
  std::vector<PrimaryComponent> primary_components() const;
  IsoType invariant_factors() const;

  std::string to_string() const;

 private:
  std::vector<Natural> moduli_;
};

// Assembles invariant factors from per-prime types.
IsoType iso_type_from_primary(const std::vector<std::pair<Natural, Partition>>& parts);
// Per-prime type of an isomorphism class.
std::vector<std::pair<Natural, Partition>> primary_types(const IsoType& t);

}  // namespace abelcount

#endif  // ABELCOUNT_GROUP_HPP_
