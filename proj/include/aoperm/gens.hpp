//
// aoperm - alternating oriented partial permutation monoids on a finite chain
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef AOPERM_GENS_HPP_
#define AOPERM_GENS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aoperm/engine.hpp"

namespace aoperm {

//! The named generator families: the full rotation g and its square, the
//! (n-1)-cycles g1 (on {2..n}) and gn (on {1..n-1}) and gn's square, the
//! full reflection h and the twisted reflections hg / hn / hn*gn, and the
//! rank n-1 order-preserving family x(i) mapping the complement of i onto
//! the complement of its shifted partner.
enum class GenName : uint8_t { g, g2, g1, gn, gn2, h, hg, hn, hngn, x };

struct GenSpec {
  GenName name;
  int index = 0;  // only used by x

  bool operator==(GenSpec const& other) const noexcept {
    return name == other.name && index == other.index;
  }
};

std::string to_string(GenSpec const& spec);

/// Recognizes "g", "g2", "g1", "gn", "gn2", "h", "hg", "hn", "hngn", "x<i>".
std::optional<GenSpec> genspec_from_string(std::string_view s);

/// The exact partial permutation of the named family at degree n.
PartialPerm realize(GenSpec spec, int n);

/// The known minimum generating set: {g, gn2} / {g2, g1, gn} for AOPn by the
/// parity of n; one of four sets for AORn by n mod 4; {x1..xn} for AOn.
std::vector<GenSpec> minimum_generating_set(MonoidKind kind, int n);

struct GenerationResult {
  bool generates;
  uint64_t closure_size;
};

/// Closes the realized specs and compares the result, as a set, with the
/// full enumeration of the monoid.
GenerationResult verify_generating(MonoidKind kind, int n,
                                   std::vector<GenSpec> const& specs);

struct RankBound {
  int unit_group_rank;            // minimum generating count of the units
  int maximal_nonunit_j_classes;  // each needs its own generator
  int bound;                      // their sum
};

/// Structural lower bound for the rank of AOPn / AORn: a generating set must
/// generate the unit group and hit every maximal non-unit J-class.
RankBound rank_lower_bound(MonoidKind kind, int n);

/// True iff no r-element subset generates the monoid. When anchor is given,
/// one generator is fixed to its realization and all (r-1)-subsets are swept
/// against it. Subsets that provably generate a proper submonoid (no
/// non-identity unit, no rank n-1 element, or all orientation-preserving
/// inside AORn) are rejected without running their closure.
bool exhaustive_rank_check(MonoidKind kind, int n, int r,
                           std::optional<GenSpec> anchor = std::nullopt);

}  // namespace aoperm

#endif  // AOPERM_GENS_HPP_
