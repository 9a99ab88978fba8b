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

#include "abelcount/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include "abelcount/errors.hpp"

namespace abelcount {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
  }
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition Partition::from_exponents(std::vector<unsigned> exponents) {
  std::erase(exponents, 0u);
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return Partition(std::move(exponents));
}

unsigned Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::conjugate() const {
  std::vector<unsigned> out(largest());
  for (unsigned j = 1; j <= largest(); ++j) {
    out[j - 1] = static_cast<unsigned>(
        std::count_if(parts_.begin(), parts_.end(), [j](unsigned v) { return v >= j; }));
  }
  return Partition(std::move(out));
}

bool Partition::fits_in(const Partition& lambda) const {
  if (length() > lambda.length()) return false;
  for (std::size_t i = 1; i <= length(); ++i) {
    if (at(i) > lambda.at(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> sub_partitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  // Choose mu_i in [0, min(lambda_i, mu_{i-1})]; a zero ends the partition.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned cap) {
    out.emplace_back(cur);
    if (i > lambda.length()) return;
    const unsigned hi = std::min(cap, lambda.at(i));
    for (unsigned v = 1; v <= hi; ++v) {
      cur.push_back(v);
      rec(i + 1, v);
      cur.pop_back();
    }
  };
  rec(1, lambda.largest());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abelcount
