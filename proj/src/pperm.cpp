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

#include "aoperm/pperm.hpp"

#include <cctype>

namespace aoperm {

namespace {

void check_degree(int n) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw std::invalid_argument("degree must be in [" + std::to_string(kMinDegree)
                                + ", " + std::to_string(kMaxDegree) + "], got "
                                + std::to_string(n));
  }
}

uint32_t full_mask(int n) {
  return n == 32 ? 0xffffffffu : ((1u << n) - 1);
}

}  // namespace

PartialPerm::PartialPerm(int n) : n_(0), dom_(0), img_set_(0) {
  check_degree(n);
  n_ = static_cast<uint8_t>(n);
}

PartialPerm::PartialPerm(int n, std::vector<std::pair<int, int>> const& pairs)
    : PartialPerm(n) {
  for (auto const& [x, y] : pairs) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("domain point " + std::to_string(x)
                                  + " out of range for degree "
                                  + std::to_string(n));
    }
    if (y < 1 || y > n) {
      throw std::invalid_argument("image point " + std::to_string(y)
                                  + " out of range for degree "
                                  + std::to_string(n));
    }
    if (defined(x)) {
      throw std::invalid_argument("duplicate domain point "
                                  + std::to_string(x));
    }
    if ((img_set_ >> (y - 1)) & 1u) {
      throw std::invalid_argument("duplicate image point " + std::to_string(y));
    }
    set(x, y);
  }
}

PartialPerm PartialPerm::identity(int n) {
  PartialPerm a(n);
  for (int x = 1; x <= n; ++x) {
    a.set(x, x);
  }
  return a;
}

PartialPerm PartialPerm::partial_identity(int n, uint32_t dom_mask) {
  PartialPerm a(n);
  if (dom_mask & ~full_mask(n)) {
    throw std::invalid_argument("domain mask out of range");
  }
  for (uint32_t m = dom_mask; m != 0; m &= m - 1) {
    int x = __builtin_ctz(m) + 1;
    a.set(x, x);
  }
  return a;
}

PartialPerm PartialPerm::order_iso(int n, uint32_t dom_mask, uint32_t img_mask) {
  PartialPerm a(n);
  if ((dom_mask & ~full_mask(n)) || (img_mask & ~full_mask(n))) {
    throw std::invalid_argument("mask out of range");
  }
  if (__builtin_popcount(dom_mask) != __builtin_popcount(img_mask)) {
    throw std::invalid_argument("order_iso requires masks of equal size");
  }
  uint32_t d = dom_mask, i = img_mask;
  while (d != 0) {
    int x = __builtin_ctz(d) + 1;
    int y = __builtin_ctz(i) + 1;
    a.set(x, y);
    d &= d - 1;
    i &= i - 1;
  }
  return a;
}

bool PartialPerm::is_identity() const noexcept {
  return n_ > 0 && dom_ == full_mask(n_) && is_partial_identity();
}

bool PartialPerm::is_partial_identity() const noexcept {
  for (uint32_t m = dom_; m != 0; m &= m - 1) {
    int x = __builtin_ctz(m) + 1;
    if (img_[x - 1] != x) {
      return false;
    }
  }
  return true;
}

std::vector<int> PartialPerm::dom() const {
  std::vector<int> out;
  out.reserve(rank());
  for (uint32_t m = dom_; m != 0; m &= m - 1) {
    out.push_back(__builtin_ctz(m) + 1);
  }
  return out;
}

std::vector<int> PartialPerm::img_seq() const {
  std::vector<int> out;
  out.reserve(rank());
  for (uint32_t m = dom_; m != 0; m &= m - 1) {
    out.push_back(img_[__builtin_ctz(m)]);
  }
  return out;
}

int PartialPerm::dom_gap() const {
  if (rank() != n_ - 1) {
    throw std::invalid_argument("gaps are only defined at rank n - 1");
  }
  return __builtin_ctz(~dom_ & full_mask(n_)) + 1;
}

int PartialPerm::img_gap() const {
  if (rank() != n_ - 1) {
    throw std::invalid_argument("gaps are only defined at rank n - 1");
  }
  return __builtin_ctz(~img_set_ & full_mask(n_)) + 1;
}

PartialPerm PartialPerm::inverse() const {
  PartialPerm out(n_);
  for (uint32_t m = dom_; m != 0; m &= m - 1) {
    int x = __builtin_ctz(m) + 1;
    out.set(img_[x - 1], x);
  }
  return out;
}

PartialPerm PartialPerm::restricted(uint32_t dom_mask) const {
  PartialPerm out(n_);
  for (uint32_t m = dom_ & dom_mask; m != 0; m &= m - 1) {
    int x = __builtin_ctz(m) + 1;
    out.set(x, img_[x - 1]);
  }
  return out;
}

bool PartialPerm::operator<(PartialPerm const& other) const noexcept {
  if (n_ != other.n_) {
    return n_ < other.n_;
  }
  int ra = rank(), rb = other.rank();
  if (ra != rb) {
    return ra < rb;
  }
  if (dom_ != other.dom_) {
    return dom_ < other.dom_;
  }
  return img_ < other.img_;
}

size_t PartialPerm::hash_value() const noexcept {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(n_);
  mix(dom_);
  for (int i = 0; i < n_; ++i) {
    mix(img_[i]);
  }
  return static_cast<size_t>(h);
}

PartialPerm operator*(PartialPerm const& a, PartialPerm const& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot compose maps of degrees "
                                + std::to_string(a.degree()) + " and "
                                + std::to_string(b.degree()));
  }
  PartialPerm out(a.degree());
  for (uint32_t m = a.dom_; m != 0; m &= m - 1) {
    int x = __builtin_ctz(m) + 1;
    int y = a.img_[x - 1];
    if (b.defined(y)) {
      out.set(x, b.img_[y - 1]);
    }
  }
  return out;
}

PartialPerm pow(PartialPerm const& a, long k) {
  if (k < 0) {
    throw std::invalid_argument("negative powers of partial maps are not defined");
  }
  if (k == 0) {
    if (!a.is_total()) {
      throw std::invalid_argument(
          "the 0-th power of a strictly partial map is not defined");
    }
    return PartialPerm::identity(a.degree());
  }
  PartialPerm out = a;
  for (long i = 1; i < k; ++i) {
    out = out * a;
  }
  return out;
}

Permutation::Permutation(int n) {
  check_degree(n);
  n_ = static_cast<uint8_t>(n);
  for (int x = 1; x <= n; ++x) {
    img_[x - 1] = static_cast<uint8_t>(x);
  }
}

Permutation::Permutation(int n, std::vector<int> const& images) {
  check_degree(n);
  if (static_cast<int>(images.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " images");
  }
  n_ = static_cast<uint8_t>(n);
  uint32_t seen = 0;
  for (int x = 1; x <= n; ++x) {
    int y = images[x - 1];
    if (y < 1 || y > n || ((seen >> (y - 1)) & 1u)) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen |= 1u << (y - 1);
    img_[x - 1] = static_cast<uint8_t>(y);
  }
}

Permutation Permutation::inverse() const {
  Permutation out(n_);
  for (int x = 1; x <= n_; ++x) {
    out.img_[img_[x - 1] - 1] = static_cast<uint8_t>(x);
  }
  return out;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  if (k < 0) {
    k = -k;
  }
  Permutation out(n_);
  for (long i = 0; i < k; ++i) {
    out = out * base;
  }
  return out;
}

PartialPerm Permutation::to_partial() const {
  PartialPerm out(n_);
  for (int x = 1; x <= n_; ++x) {
    out.set(x, img_[x - 1]);
  }
  return out;
}

Permutation Permutation::from_partial(PartialPerm const& a) {
  if (!a.is_total()) {
    throw std::invalid_argument("not a total map");
  }
  Permutation out(a.degree());
  for (int x = 1; x <= a.degree(); ++x) {
    out.img_[x - 1] = static_cast<uint8_t>(a[x]);
  }
  return out;
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot compose permutations of different degrees");
  }
  Permutation result(a.degree());
  for (int x = 1; x <= a.degree(); ++x) {
    result.img_[x - 1] = static_cast<uint8_t>(b[a[x]]);
  }
  return result;
}

int sign(Permutation const& p) {
  int n = p.degree();
  uint32_t visited = 0;
  int cycles = 0;
  for (int x = 1; x <= n; ++x) {
    if ((visited >> (x - 1)) & 1u) {
      continue;
    }
    ++cycles;
    int y = x;
    while (!((visited >> (y - 1)) & 1u)) {
      visited |= 1u << (y - 1);
      y = p[y];
    }
  }
  return ((n - cycles) % 2 == 0) ? +1 : -1;
}

Permutation completion(PartialPerm const& a) {
  int n = a.degree();
  if (a.rank() != n - 1) {
    throw std::invalid_argument("completion requires rank n - 1, got rank "
                                + std::to_string(a.rank()));
  }
  std::vector<int> images(n);
  for (uint32_t m = a.dom_mask(); m != 0; m &= m - 1) {
    int x = __builtin_ctz(m) + 1;
    images[x - 1] = a[x];
  }
  images[a.dom_gap() - 1] = a.img_gap();
  return Permutation(n, images);
}

std::string format_pperm(PartialPerm const& a) {
  if (a.is_empty()) {
    return "{}";
  }
  std::string out;
  bool first = true;
  for (int x : a.dom()) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += std::to_string(x) + "->" + std::to_string(a[x]);
  }
  return out;
}

PartialPerm parse_pperm(int n, std::string const& text) {
  if (text == "{}") {
    return PartialPerm(n);
  }
  uint32_t seen_dom = 0, seen_img = 0;
  std::vector<std::pair<int, int>> pairs;
  size_t pos = 0;
  auto parse_point = [&]() -> int {
    size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a point", pos);
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > kMaxDegree) {
        throw ParseError("point out of range", start);
      }
      ++pos;
    }
    if (v < 1 || v > n) {
      throw ParseError("point out of range for degree " + std::to_string(n),
                       start);
    }
    return static_cast<int>(v);
  };
  while (true) {
    size_t entry_pos = pos;
    int x = parse_point();
    if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>') {
      throw ParseError("expected '->'", pos);
    }
    pos += 2;
    int y = parse_point();
    if ((seen_dom >> (x - 1)) & 1u) {
      throw ParseError("duplicate domain point " + std::to_string(x), entry_pos);
    }
    if ((seen_img >> (y - 1)) & 1u) {
      throw ParseError("duplicate image point " + std::to_string(y), entry_pos);
    }
    seen_dom |= 1u << (x - 1);
    seen_img |= 1u << (y - 1);
    pairs.emplace_back(x, y);
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != ',') {
      throw ParseError("expected ',' or end of input", pos);
    }
    ++pos;
  }
  return PartialPerm(n, pairs);
}

std::ostream& operator<<(std::ostream& os, PartialPerm const& a) {
  return os << format_pperm(a);
}

std::ostream& operator<<(std::ostream& os, Permutation const& p) {
  return os << format_pperm(p.to_partial());
}

}  // namespace aoperm
