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

#ifndef ABELCOUNT_VERIFY_HPP_
#define ABELCOUNT_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcount/group.hpp"
#include "abelcount/oracle.hpp"

namespace abelcount {

struct VerifyReport {
  std::uint64_t groups_checked = 0;
  std::uint64_t subgroups_checked = 0;
  std::uint64_t bijections_checked = 0;
  // First disagreement, e.g. "(4,6): total_count_2 = 15, oracle = 16".
  std::optional<std::string> first_mismatch;
  bool ok() const { return !first_mismatch.has_value(); }
};

// Compares every counting function applicable to g against the oracle;
// for arity 2 and 3 also checks the explicit enumeration element by element.
VerifyReport verify_group(const GroupSpec& g, std::uint64_t oracle_bound = kDefaultOracleMaxOrder);

// All ordered tuples of the given arities (moduli >= 1) with group order
// <= max_order. Stops at the first mismatch.
VerifyReport verify_range(std::uint64_t max_order, const std::vector<unsigned>& arities,
                          std::uint64_t oracle_bound = kDefaultOracleMaxOrder);

std::vector<GroupSpec> tuples_up_to(std::uint64_t max_order, unsigned arity);

}  // namespace abelcount

#endif  // ABELCOUNT_VERIFY_HPP_
