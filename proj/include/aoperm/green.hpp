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

#ifndef AOPERM_GREEN_HPP_
#define AOPERM_GREEN_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aoperm/engine.hpp"

namespace aoperm {

/// Marks the two J-classes of a split rank n-1 level by the parity of the
/// domain gap of their members.
enum class GapTag : uint8_t { none, odd, even };

struct GroupType {
  enum class Tag : uint8_t { trivial, cyclic, dihedral, klein } tag;
  int order;

  bool operator==(GroupType const& other) const noexcept {
    return tag == other.tag && order == other.order;
  }
};

std::string to_string(GroupType const& g);

struct JClassInfo {
  int rank;
  GapTag tag = GapTag::none;
  size_t size = 0;
  size_t n_l_classes = 0;
  size_t n_r_classes = 0;
  size_t h_size = 0;
  bool has_idempotent = false;
  std::optional<GroupType> group;  // of the idempotent H-classes
};

//! The four Green partitions of a MonoidSet plus the J-class order.
//!
//! L, R and H are keyed by image set, domain set and both (valid for inverse
//! submonoids of the symmetric inverse monoid). J is computed structurally,
//! as mutual reachability under one-sided multiplication by generators, so
//! the rank n-1 split emerges instead of being assumed.
struct GreenStructure {
  size_t n_l = 0, n_r = 0, n_h = 0, n_j = 0;
  std::vector<uint32_t> l_of, r_of, h_of, j_of;       // per element
  std::vector<JClassInfo> j_info;                     // per J-class id
  std::vector<std::vector<element_index>> j_members;  // per J-class id
  std::vector<std::vector<element_index>> h_members;  // per H-class id
  std::vector<std::vector<char>> j_leq;  // j_leq[a][b]: J_a <=_J J_b
  std::vector<std::pair<uint32_t, uint32_t>> hasse;   // (upper, lower) covers

  bool is_chain() const noexcept {
    return hasse.size() + 1 == j_info.size();
  }
};

GreenStructure green_classes(MonoidSet const& M);

/// DOT digraph of the J-class Hasse diagram: one boxed node per class,
/// labeled by rank (and the o/e side where the level splits); the edges are
/// the covering relations only.
std::string j_poset_dot(GreenStructure const& G);

/// Identifies the abstract group of a group H-class from its order profile:
/// trivial, cyclic (some element has full order), Klein (order 4, no
/// 4-cycle), or dihedral (an index-2 cyclic subgroup inverted by an
/// involution). Throws when the H-class has no idempotent.
GroupType h_group_type(MonoidSet const& M,
                       std::vector<element_index> const& h_class);

/// JSON summary: {"j_classes":[{rank,tag,size,n_L,n_R,h_size,group_type}...],
/// "hasse_edges":[[upper,lower]...]}.
std::string green_summary_json(GreenStructure const& G);

}  // namespace aoperm

#endif  // AOPERM_GREEN_HPP_
