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

#ifndef AOPERM_PPERM_HPP_
#define AOPERM_PPERM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aoperm {

// Degree bounds for the chain {1 < 2 < ... < n}. The core arithmetic in this
// header works from degree 1 so that small group identities can be exercised;
// the monoid-level interfaces (enumeration, membership, congruences) require
// degree >= 3.
constexpr int kMinDegree = 1;
constexpr int kMaxDegree = 32;

/// Thrown when a text literal cannot be parsed; carries the byte offset of
/// the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& msg, size_t pos)
      : std::invalid_argument(msg + " (at position " + std::to_string(pos)
                              + ")"),
        pos_(pos) {}

  size_t position() const noexcept {
    return pos_;
  }

 private:
  size_t pos_;
};

/// Thrown when an operation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Permutation;

//! An injective partial self-map of the chain {1, ..., n}.
//!
//! The domain is kept as a bit mask over one machine word (bit i - 1 set iff
//! the point i is in the domain), and images are stored positionally, so
//! domain/image equality tests are O(1). Values are immutable after
//! construction.
//!
//! Products act on the right throughout the library: x * (a b) = (x a) b,
//! i.e. a * b means "apply a, then b".
class PartialPerm {
 public:
  PartialPerm() = default;  // the (invalid) degree-0 placeholder

  /// The empty map on {1..n}.
  explicit PartialPerm(int n);

  /// Build from explicit (point, image) pairs; validates injectivity and
  /// range.
  PartialPerm(int n, std::vector<std::pair<int, int>> const& pairs);

  static PartialPerm identity(int n);

  /// The partial identity on the points of dom_mask.
  static PartialPerm partial_identity(int n, uint32_t dom_mask);

  /// The unique order-preserving bijection from the points of dom_mask onto
  /// the points of img_mask (the two masks must have equal popcount).
  static PartialPerm order_iso(int n, uint32_t dom_mask, uint32_t img_mask);

  int degree() const noexcept {
    return n_;
  }

  int rank() const noexcept {
    return __builtin_popcount(dom_);
  }

  uint32_t dom_mask() const noexcept {
    return dom_;
  }

  uint32_t img_mask() const noexcept {
    return img_set_;
  }

  bool defined(int x) const noexcept {
    return x >= 1 && x <= n_ && (dom_ >> (x - 1)) & 1u;
  }

  /// Image of x; x must belong to the domain.
  int operator[](int x) const {
    if (!defined(x)) {
      throw std::invalid_argument("point " + std::to_string(x)
                                  + " is not in the domain");
    }
    return img_[x - 1];
  }

  bool is_empty() const noexcept {
    return dom_ == 0;
  }

  bool is_total() const noexcept {
    return rank() == n_;
  }

  bool is_identity() const noexcept;

  /// True iff this is a partial identity (equivalently, an idempotent).
  bool is_partial_identity() const noexcept;

  /// Domain points in increasing order.
  std::vector<int> dom() const;

  /// Images listed in increasing domain order.
  std::vector<int> img_seq() const;

  /// The missing domain point; only defined for elements of rank n - 1.
  int dom_gap() const;

  /// The missing image point; only defined for elements of rank n - 1.
  int img_gap() const;

  PartialPerm inverse() const;

  /// Restriction to the points of the given mask (intersected with the
  /// domain).
  PartialPerm restricted(uint32_t dom_mask) const;

  bool operator==(PartialPerm const& other) const noexcept {
    return n_ == other.n_ && dom_ == other.dom_ && img_ == other.img_;
  }

  bool operator!=(PartialPerm const& other) const noexcept {
    return !(*this == other);
  }

  /// Canonical order: degree, then rank, then domain mask, then image bytes.
  bool operator<(PartialPerm const& other) const noexcept;

  size_t hash_value() const noexcept;

 private:
  friend PartialPerm operator*(PartialPerm const&, PartialPerm const&);
  friend class Permutation;

  void set(int x, int y) noexcept {
    dom_ |= 1u << (x - 1);
    img_set_ |= 1u << (y - 1);
    img_[x - 1] = static_cast<uint8_t>(y);
  }

  uint8_t n_ = 0;
  uint32_t dom_ = 0;
  uint32_t img_set_ = 0;
  std::array<uint8_t, kMaxDegree> img_{};  // img_[i - 1], or 0 off the domain
};

/// Composition acting left to right: x (a * b) = (x a) b. The operands must
/// have equal degree.
PartialPerm operator*(PartialPerm const& a, PartialPerm const& b);

inline PartialPerm compose(PartialPerm const& a, PartialPerm const& b) {
  return a * b;
}

/// k-th power by repeated composition. k = 0 is only allowed for total
/// elements (returning the identity); for strictly partial elements there is
/// no canonical 0-th power and the call is rejected.
PartialPerm pow(PartialPerm const& a, long k);

//! A permutation of {1, ..., n} (a total partial permutation, kept as its own
//! type because completions, signs and unit groups live here).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int n);  // identity

  Permutation(int n, std::vector<int> const& images);

  static Permutation identity(int n) {
    return Permutation(n);
  }

  int degree() const noexcept {
    return n_;
  }

  int operator[](int x) const {
    if (x < 1 || x > n_) {
      throw std::invalid_argument("point out of range");
    }
    return img_[x - 1];
  }

  Permutation inverse() const;

  /// k-th power; k may be negative.
  Permutation pow(long k) const;

  PartialPerm to_partial() const;

  /// Requires a total partial permutation.
  static Permutation from_partial(PartialPerm const& a);

  bool operator==(Permutation const& other) const noexcept {
    return n_ == other.n_ && img_ == other.img_;
  }

  bool operator!=(Permutation const& other) const noexcept {
    return !(*this == other);
  }

  bool operator<(Permutation const& other) const noexcept {
    return n_ != other.n_ ? n_ < other.n_ : img_ < other.img_;
  }

 private:
  friend Permutation operator*(Permutation const&, Permutation const&);

  uint8_t n_ = 0;
  std::array<uint8_t, kMaxDegree> img_{};
};

/// Composition acting left to right, as for PartialPerm.
Permutation operator*(Permutation const& a, Permutation const& b);

/// +1 for even permutations, -1 for odd ones (via cycle decomposition).
int sign(Permutation const& p);

/// The unique permutation extending a rank n - 1 partial permutation: the
/// missing domain point is sent to the missing image point.
Permutation completion(PartialPerm const& a);

/// Canonical text form: "{}" for the empty map, else comma-separated "k->v"
/// pairs in increasing domain order.
std::string format_pperm(PartialPerm const& a);

/// Inverse of format_pperm; the degree is supplied by the caller. Rejects
/// duplicate domain points, duplicate image points and out-of-range points,
/// reporting the offending position.
PartialPerm parse_pperm(int n, std::string const& text);

std::ostream& operator<<(std::ostream& os, PartialPerm const& a);
std::ostream& operator<<(std::ostream& os, Permutation const& p);

}  // namespace aoperm

namespace std {

template <>
struct hash<aoperm::PartialPerm> {
  size_t operator()(aoperm::PartialPerm const& a) const noexcept {
    return a.hash_value();
  }
};

}  // namespace std

#endif  // AOPERM_PPERM_HPP_
