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

#ifndef ABELCOUNT_ORACLE_HPP_
#define ABELCOUNT_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "abelcount/enumerate.hpp"
#include "abelcount/group.hpp"
#include "abelcount/natural.hpp"

namespace abelcount {

inline constexpr std::uint64_t kDefaultOracleMaxOrder = 2000;

// Z_{n1} x ... x Z_{nk} with elements encoded in mixed radix, first
// coordinate most significant.
class FiniteAbelianGroup {
 public:
  // Throws BudgetError if the order exceeds max_order.
  explicit FiniteAbelianGroup(const GroupSpec& g,
                              std::uint64_t max_order = kDefaultOracleMaxOrder);

  std::uint64_t order() const { return order_; }
  std::size_t arity() const { return moduli_.size(); }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }

  std::uint32_t encode(const Element& x) const;
  Element decode(std::uint32_t index) const;
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t negate(std::uint32_t x) const;
  std::uint32_t multiple(std::uint64_t k, std::uint32_t x) const;
  std::uint64_t element_order(std::uint32_t x) const { return element_order_[x]; }

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint32_t> weight_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> element_order_;
};

class OracleSubgroup {
 public:
  OracleSubgroup() = default;
  explicit OracleSubgroup(std::uint64_t group_order);

  bool contains(std::uint32_t x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }
  void insert(std::uint32_t x);
  std::uint64_t order() const { return order_; }
  std::vector<std::uint32_t> members() const;
  bool is_subset_of(const OracleSubgroup& other) const;

  friend bool operator==(const OracleSubgroup& a, const OracleSubgroup& b) {
    return a.bits_ == b.bits_;
  }
  // Canonical order: compare membership bitsets from the lowest index up.
  friend bool operator<(const OracleSubgroup& a, const OracleSubgroup& b);

 private:
  std::vector<std::uint64_t> bits_;
  std::uint64_t order_ = 0;
};

// Every subgroup, generated from the trivial one by repeated joins with
// cyclic subgroups. A seed permutes the join order.
std::vector<OracleSubgroup> all_subgroups(const FiniteAbelianGroup& g,
                                          std::optional<std::uint64_t> shuffle_seed = {});

// Throws InternalError if `h` is not a subgroup.
void check_subgroup(const FiniteAbelianGroup& g, const OracleSubgroup& h);

IsoType isotype_of(const FiniteAbelianGroup& g, const OracleSubgroup& h);

ElementSet to_element_set(const FiniteAbelianGroup& g, const OracleSubgroup& h);

struct OracleStats {
  Natural total = 0;
  Natural cyclic = 0;
  std::map<Natural, Natural> by_order;
  std::map<Natural, Natural> cyclic_by_order;
  std::map<IsoType, Natural> by_isotype;
  Natural sigma[3] = {0, 0, 0};
  Natural maximal = 0;
  Natural exponent_sum = 0;
};

OracleStats oracle_stats(const FiniteAbelianGroup& g);
OracleStats oracle_stats(const FiniteAbelianGroup& g, const std::vector<OracleSubgroup>& subs);

}  // namespace abelcount

#endif  // ABELCOUNT_ORACLE_HPP_
