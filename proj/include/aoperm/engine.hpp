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

#ifndef AOPERM_ENGINE_HPP_
#define AOPERM_ENGINE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "aoperm/classify.hpp"
#include "aoperm/pperm.hpp"

namespace aoperm {

using element_index = uint32_t;
constexpr element_index kNoElement = UINT32_MAX;

/// Full enumeration is capped at this degree (|In| grows like n!^2 / ...).
constexpr int kEnumerationDegreeCap = 8;

//! A finished, indexed enumeration of one monoid's elements.
//!
//! Elements are deduplicated and carry stable indices; the element order is
//! deterministic (see closure / enumerate) so that partitions over the index
//! space can be diffed across runs. A finished MonoidSet is immutable and
//! safe to share between threads.
class MonoidSet {
 public:
  MonoidSet() = default;

  int degree() const noexcept {
    return n_;
  }

  size_t size() const noexcept {
    return elements_.size();
  }

  std::optional<MonoidKind> kind() const noexcept {
    return kind_;
  }

  PartialPerm const& at(element_index i) const {
    return elements_.at(i);
  }

  std::vector<PartialPerm> const& elements() const noexcept {
    return elements_;
  }

  bool contains(PartialPerm const& a) const {
    return index_.count(a) != 0;
  }

  /// Index of an element; kNoElement when absent.
  element_index find(PartialPerm const& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? kNoElement : it->second;
  }

  /// Index of an element; throws when absent.
  element_index index_of(PartialPerm const& a) const;

  element_index identity_index() const noexcept {
    return identity_;
  }

  bool includes_identity() const noexcept {
    return identity_ != kNoElement;
  }

  /// Index of the product (the set is closed, so this always succeeds).
  element_index mul(element_index a, element_index b) const {
    return index_of(elements_[a] * elements_[b]);
  }

  element_index inv(element_index a) const {
    return index_of(elements_[a].inverse());
  }

  /// Indices of a generating set: the construction generators for
  /// closure-built sets, otherwise one computed greedily (scanning elements
  /// in descending canonical order) and cached.
  std::vector<element_index> const& generator_ids() const;

 private:
  friend MonoidSet closure(int, std::vector<PartialPerm> const&);
  friend MonoidSet enumerate(MonoidKind, int, bool);

  void finish_index();

  int n_ = 0;
  std::optional<MonoidKind> kind_;
  std::vector<PartialPerm> elements_;
  std::unordered_map<PartialPerm, element_index> index_;
  element_index identity_ = kNoElement;
  mutable std::vector<element_index> gens_;
};

/// Smallest monoid containing the identity and the generators, closed under
/// composition. Elements are ordered by breadth-first product layer and
/// canonically within a layer.
MonoidSet closure(int n, std::vector<PartialPerm> const& generators);

/// Every element of the given monoid at the given degree, by filtering all
/// injective partial maps through the definition-level membership test.
/// Elements are in canonical order (rank, then domain, then images).
MonoidSet enumerate(MonoidKind kind, int n, bool unsafe_cap = false);

/// Exact closed-form cardinality. Supported: In, AIn, POPIn, PORIn, AOPn,
/// AORn; the remaining kinds have no closed form here.
mpz_class cardinality_formula(MonoidKind kind, int n);

struct Ideal {
  std::vector<char> member;  // indicator over element indices
  std::string label;         // "I<k>", or "I<k>o" / "I<k>e" for split levels
  size_t size = 0;
};

/// All two-sided ideals, computed as the nonempty downward-closed unions of
/// J-classes: the rank chain I_0..I_n, plus the two one-sided rank n-1
/// ideals exactly when that level splits.
std::vector<Ideal> ideals(MonoidSet const& M);

/// Writes a rotation index i and an order-preserving b with a = g^i b and
/// rank(b) = rank(a); i is the least index that works. Requires an
/// orientation-preserving input.
std::pair<int, PartialPerm> factor_gib(PartialPerm const& a);

/// JSON-lines export: a header object {"kind","n","count"}, then one element
/// object {"n","dom","img"} per line, in canonical order.
void write_elements_jsonl(MonoidSet const& M, std::ostream& os);

/// The JSON object form of a single element.
std::string pperm_json(PartialPerm const& a);

}  // namespace aoperm

#endif  // AOPERM_ENGINE_HPP_
