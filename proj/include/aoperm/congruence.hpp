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

#ifndef AOPERM_CONGRUENCE_HPP_
#define AOPERM_CONGRUENCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "aoperm/green.hpp"

namespace aoperm {

/// Brute-force congruence computation is capped around this monoid size
/// (the seed-pair count is quadratic).
constexpr size_t kCongruenceOracleCap = 5000;

//! A partition of a MonoidSet's index space compatible with multiplication,
//! held in canonical form: blocks are numbered by first occurrence, so two
//! partitions are equal iff their block vectors are equal.
class Congruence {
 public:
  Congruence() = default;

  static Congruence identity_congruence(size_t n);
  static Congruence universal_congruence(size_t n);

  /// Canonicalizes an arbitrary block assignment.
  static Congruence from_block_of(std::vector<uint32_t> const& raw);

  size_t degree() const noexcept {
    return block_of_.size();
  }

  uint32_t block_count() const noexcept {
    return n_blocks_;
  }

  uint32_t block_of(element_index e) const {
    return block_of_[e];
  }

  std::vector<uint32_t> const& blocks() const noexcept {
    return block_of_;
  }

  bool related(element_index a, element_index b) const {
    return block_of_[a] == block_of_[b];
  }

  /// True iff every block of *this is contained in a block of coarser.
  bool refines(Congruence const& coarser) const;

  bool operator==(Congruence const& other) const noexcept {
    return block_of_ == other.block_of_;
  }

  bool operator!=(Congruence const& other) const noexcept {
    return !(*this == other);
  }

  bool operator<(Congruence const& other) const noexcept {
    if (n_blocks_ != other.n_blocks_) {
      return n_blocks_ > other.n_blocks_;  // finer first
    }
    return block_of_ < other.block_of_;
  }

  size_t hash_value() const noexcept;

 private:
  std::vector<uint32_t> block_of_;
  uint32_t n_blocks_ = 0;
};

/// Compatibility check (via the generators, which suffices): a ~ b implies
/// ga ~ gb and ag ~ bg.
bool is_congruence(MonoidSet const& M, Congruence const& c);

/// The Rees congruence of an ideal: a ~ b iff a = b or both lie in the
/// ideal. The absorption property of the input is verified.
Congruence rees_congruence(MonoidSet const& M, Ideal const& ideal);

/// The smallest congruence relating a and b (pair closure: saturate the seed
/// pair under one-sided generator multiplication, with transitivity kept by
/// a union-find).
Congruence principal_congruence(MonoidSet const& M, element_index a,
                                element_index b);

/// Join in the congruence lattice: the transitive closure of the union
/// (which is again compatible).
Congruence join(Congruence const& a, Congruence const& b);

//! The normalization of one J-class into a fixed anchor group H-class:
//! for each member, flanking maps into the class of the anchor idempotent
//! and the normalized product tilde = tilde_left * x * tilde_right.
struct TildeMap {
  uint32_t j_class = 0;
  std::vector<element_index> members;  // the J-class, ascending
  element_index anchor = kNoElement;   // the partial identity id_X
  std::vector<element_index> anchor_h_class;
  std::vector<PartialPerm> tilde_left, tilde_right;  // aligned with members
  std::vector<element_index> tilde;                  // aligned with members

  element_index tilde_of(MonoidSet const& M, element_index e) const;
};

/// Builds the normalization of a regular J-class. The flank family is
/// selected by the class's shape: order-preserving flanks onto {1..k} for
/// rank k <= n-2; the left/right flank maps themselves on the even side of a
/// split level and {2..n}-anchored flanks on the odd side; for an unsplit
/// rank n-1 class, rotation-twisted flanks when n is odd and
/// reflection-twisted ones when n is divisible by four. The unit class gets
/// the identity normalization.
TildeMap tilde_map(MonoidSet const& M, GreenStructure const& G,
                   uint32_t j_class);

//! A congruence of a group H-class, i.e. the coset partition of a normal
//! subgroup.
struct GroupCongruence {
  std::vector<element_index> h_class;          // ascending
  std::vector<element_index> normal_subgroup;  // ascending
  std::vector<uint32_t> coset_of;              // aligned with h_class
  uint32_t n_cosets = 0;
  std::string label;
};

/// All congruences of a group H-class, one per normal subgroup. Subgroups
/// are enumerated generically (grow known subgroups by one element and
/// close, until stable), then filtered for conjugation invariance.
std::vector<GroupCongruence> group_congruences(
    MonoidSet const& M, std::vector<element_index> const& h_class);

/// x ~ y iff x = y, or both lie in B(J) = {a : J is not below J_a}, or x, y
/// are H-related in J with related normalizations.
Congruence build_pi(MonoidSet const& M, GreenStructure const& G,
                    TildeMap const& tm, GroupCongruence const& rho);

/// Same with A(J) = {a : J_a < J} in place of B(J); theta refines pi.
Congruence build_theta(MonoidSet const& M, GreenStructure const& G,
                       TildeMap const& tm, GroupCongruence const& rho);

/// The union of the two thetas of a split rank n-1 level (their A-ideals
/// must coincide, which makes the union transitive).
Congruence build_theta_union(MonoidSet const& M, GreenStructure const& G,
                             TildeMap const& tm_odd,
                             GroupCongruence const& rho_odd,
                             TildeMap const& tm_even,
                             GroupCongruence const& rho_even);

struct LabeledCongruence {
  Congruence congruence;
  std::string label;
};

/// The complete congruence set assembled from the classification: the
/// universal congruence plus the pi family over every rank (chain shape), or
/// the pi families away from rank n-1 plus pi / theta-union families at the
/// split level (diamond shape). Deduplicated as partitions and sorted
/// finest-first.
std::vector<LabeledCongruence> enumerate_congruences_constructive(
    MonoidSet const& M, GreenStructure const& G);

std::vector<LabeledCongruence> enumerate_congruences_constructive(
    MonoidSet const& M);

/// The complete congruence lattice by brute force: every principal
/// congruence of an element pair, closed under joins, plus the identity.
/// Sorted finest-first.
std::vector<Congruence> congruence_lattice_oracle(MonoidSet const& M,
                                                  bool unsafe_cap = false);

/// DOT digraph of the congruence lattice under refinement: one node per
/// congruence labeled "label / #blocks"; edges are covering relations.
std::string lattice_dot(std::vector<LabeledCongruence> const& lattice);

}  // namespace aoperm

namespace std {

template <>
struct hash<aoperm::Congruence> {
  size_t operator()(aoperm::Congruence const& c) const noexcept {
    return c.hash_value();
  }
};

}  // namespace std

#endif  // AOPERM_CONGRUENCE_HPP_
