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

#ifndef ABELCOUNT_TABLES_HPP_
#define ABELCOUNT_TABLES_HPP_

#include <string>

namespace abelcount {

// "n\tN(n)" header, then one row per n in [from, to].
std::string table_nn(unsigned from = 1, unsigned to = 30);

// Rank-4 polynomial tables: the total and the order rows 1, p, ..., p^{n/2}
// for exponent tuples (1,1,1,1), (1,1,1,2), (1,1,2,2), (1,2,2,2),
// (2,2,2,2), (3,3,3,3); blank line between tuples.
std::string table_n4_polys();

// s(p^l1, p^l2, p^l3) for max_part >= l1 >= l2 >= l3 >= 1.
std::string table_s3_poly(unsigned max_part = 4);

}  // namespace abelcount

#endif  // ABELCOUNT_TABLES_HPP_
