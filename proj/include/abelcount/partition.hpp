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

#ifndef ABELCOUNT_PARTITION_HPP_
#define ABELCOUNT_PARTITION_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace abelcount {

// Non-increasing sequence of positive parts. Indexing through `at` is
// 1-based and zero-padded, so at(r + 1) == 0 for a partition with r parts.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and non-increasing.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts);

  // Sorts into non-increasing order and drops zeros.
  static Partition from_exponents(std::vector<unsigned> exponents);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned weight() const;
  unsigned at(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // lambda'_j = #{i : lambda_i >= j}
  Partition conjugate() const;
  // mu <= lambda componentwise (mu padded with zeros).
  bool fits_in(const Partition& lambda) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

// Every partition mu with mu <= lambda componentwise, including the empty one.
std::vector<Partition> sub_partitions(const Partition& lambda);

}  // namespace abelcount

#endif  // ABELCOUNT_PARTITION_HPP_
