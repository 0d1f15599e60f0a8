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

#ifndef AOPERM_CLASSIFY_HPP_
#define AOPERM_CLASSIFY_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "aoperm/pperm.hpp"

namespace aoperm {

//! The eight inverse submonoids of the symmetric inverse monoid handled by
//! this library, in their customary names: In is everything, AIn the
//! restrictions of even permutations, POIn / POPIn / PORIn the
//! order-preserving / orientation-preserving / oriented elements, and
//! AOn / AOPn / AORn their intersections with AIn.
enum class MonoidKind : uint8_t {
  In,
  AIn,
  POIn,
  AOn,
  POPIn,
  PORIn,
  AOPn,
  AORn,
};

char const* to_string(MonoidKind kind);

/// Recognizes "in", "ai", "poi", "ao", "popi", "pori", "aop", "aor".
std::optional<MonoidKind> kind_from_string(std::string_view s);

/// Monoid-level operations assume a chain with at least 3 points.
void check_chain_degree(int n);

struct OrientFlags {
  bool order_preserving;
  bool order_reversing;
  bool orientation_preserving;
  bool orientation_reversing;

  bool oriented() const noexcept {
    return orientation_preserving || orientation_reversing;
  }
};

/// Descent/ascent counts of the image sequence over the ordered domain.
/// The orientation flags use the cyclic sequence (at most one descent resp.
/// ascent, where the pair (last, first) also counts); the order flags use the
/// consecutive pairs only. With fewer than two cyclic pairs nothing counts,
/// so the empty map and the points carry both orientation flags.
OrientFlags orient_flags(PartialPerm const& a);

/// Definition-level membership: rank <= n - 2 elements of AIn are always
/// members, rank n - 1 membership is decided by the parity of the completion
/// and rank n by the parity of the permutation itself; the monotone /
/// oriented kinds additionally (or only) require their orientation flag.
/// This is the slow ground truth that member_fast is checked against.
bool member_oracle(PartialPerm const& a, MonoidKind kind);

/// Gap-parity membership test for AOPn and AORn: constant work at rank
/// <= n - 2, a unit-group test at rank n, and the d/i-parity rules (with the
/// normal form's image of 1 in the odd branches) at rank n - 1. Agrees with
/// member_oracle on every input.
bool member_fast(PartialPerm const& a, MonoidKind kind);

/// The unique order-preserving bijection {1..n-1} -> Dom(a); rank n - 1 only.
PartialPerm flank_left(PartialPerm const& a);

/// The unique order-preserving bijection Im(a) -> {1..n-1}; rank n - 1 only.
PartialPerm flank_right(PartialPerm const& a);

inline std::pair<PartialPerm, PartialPerm> flank_maps(PartialPerm const& a) {
  return {flank_left(a), flank_right(a)};
}

/// The normal form flank_left(a) * a * flank_right(a), a self-map of
/// {1..n-1}; rank n - 1 only.
PartialPerm hat(PartialPerm const& a);

/// The group of units, materialized as explicit permutations. Supported
/// kinds: POPIn (the n rotations), PORIn (rotations and reflections), and
/// AOPn / AORn (their even parts, by n mod 2 resp. n mod 4).
std::vector<Permutation> unit_group(MonoidKind kind, int n);

}  // namespace aoperm

#endif  // AOPERM_CLASSIFY_HPP_
