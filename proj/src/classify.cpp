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

#include "aoperm/classify.hpp"

#include <string>

namespace aoperm {

namespace {

uint32_t full_mask(int n) {
  return n == 32 ? 0xffffffffu : ((1u << n) - 1);
}

// x -> x + k on the cyclic chain (1-based).
Permutation rotation(int n, int k) {
  std::vector<int> images(n);
  for (int x = 1; x <= n; ++x) {
    images[x - 1] = (x - 1 + k) % n + 1;
  }
  return Permutation(n, images);
}

// x -> n + 1 - x followed by the rotation by k.
Permutation reflection(int n, int k) {
  std::vector<int> images(n);
  for (int x = 1; x <= n; ++x) {
    images[x - 1] = (n - x + k) % n + 1;
  }
  return Permutation(n, images);
}

bool is_rotation(PartialPerm const& a) {
  int n = a.degree();
  int k = a[1] - 1;
  for (int x = 1; x <= n; ++x) {
    if (a[x] != (x - 1 + k) % n + 1) {
      return false;
    }
  }
  return true;
}

// For a reflection, the shift k with a = (x -> n - x + k cyclically).
int reflection_shift(PartialPerm const& a) {
  return a[1] % a.degree();
}

}  // namespace

char const* to_string(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::In: return "in";
    case MonoidKind::AIn: return "ai";
    case MonoidKind::POIn: return "poi";
    case MonoidKind::AOn: return "ao";
    case MonoidKind::POPIn: return "popi";
    case MonoidKind::PORIn: return "pori";
    case MonoidKind::AOPn: return "aop";
    case MonoidKind::AORn: return "aor";
  }
  return "?";
}

std::optional<MonoidKind> kind_from_string(std::string_view s) {
  if (s == "in") return MonoidKind::In;
  if (s == "ai") return MonoidKind::AIn;
  if (s == "poi") return MonoidKind::POIn;
  if (s == "ao") return MonoidKind::AOn;
  if (s == "popi") return MonoidKind::POPIn;
  if (s == "pori") return MonoidKind::PORIn;
  if (s == "aop") return MonoidKind::AOPn;
  if (s == "aor") return MonoidKind::AORn;
  return std::nullopt;
}

void check_chain_degree(int n) {
  if (n < 3 || n > kMaxDegree) {
    throw std::invalid_argument("chain degree must be in [3, "
                                + std::to_string(kMaxDegree) + "], got "
                                + std::to_string(n));
  }
}

OrientFlags orient_flags(PartialPerm const& a) {
  int img[kMaxDegree];
  int t = 0;
  for (uint32_t m = a.dom_mask(); m != 0; m &= m - 1) {
    img[t++] = a[__builtin_ctz(m) + 1];
  }
  int descents = 0, ascents = 0, cyclic_descents = 0, cyclic_ascents = 0;
  for (int i = 0; i < t; ++i) {
    int j = (i + 1) % t;
    if (img[i] > img[j]) {
      ++cyclic_descents;
      if (i + 1 < t) {
        ++descents;
      }
    } else if (img[i] < img[j]) {
      ++cyclic_ascents;
      if (i + 1 < t) {
        ++ascents;
      }
    }
  }
  return OrientFlags{descents == 0, ascents == 0, cyclic_descents <= 1,
                     cyclic_ascents <= 1};
}

bool member_oracle(PartialPerm const& a, MonoidKind kind) {
  auto in_alternating = [&a]() {
    int n = a.degree(), k = a.rank();
    if (k <= n - 2) {
      return true;
    }
    if (k == n - 1) {
      return sign(completion(a)) == +1;
    }
    return sign(Permutation::from_partial(a)) == +1;
  };
  OrientFlags const f = orient_flags(a);
  switch (kind) {
    case MonoidKind::In: return true;
    case MonoidKind::AIn: return in_alternating();
    case MonoidKind::POIn: return f.order_preserving;
    case MonoidKind::AOn: return f.order_preserving && in_alternating();
    case MonoidKind::POPIn: return f.orientation_preserving;
    case MonoidKind::PORIn: return f.oriented();
    case MonoidKind::AOPn: return f.orientation_preserving && in_alternating();
    case MonoidKind::AORn: return f.oriented() && in_alternating();
  }
  return false;
}

bool member_fast(PartialPerm const& a, MonoidKind kind) {
  if (kind != MonoidKind::AOPn && kind != MonoidKind::AORn) {
    throw std::invalid_argument("member_fast only handles aop and aor");
  }
  int const n = a.degree();
  int const k = a.rank();
  OrientFlags const f = orient_flags(a);

  if (kind == MonoidKind::AOPn && !f.orientation_preserving) {
    return false;
  }
  if (kind == MonoidKind::AORn && !f.oriented()) {
    return false;
  }
  if (k <= n - 2) {
    return true;
  }

  if (k == n) {
    // Total oriented maps are the rotations and the reflections.
    if (is_rotation(a)) {
      int shift = a[1] - 1;
      return n % 2 == 1 || shift % 2 == 0;
    }
    switch (n % 4) {
      case 0: return reflection_shift(a) % 2 == 0;
      case 1: return true;
      case 2: return reflection_shift(a) % 2 == 1;
      default: return false;  // n = 3 mod 4
    }
  }

  // rank n - 1
  bool const same_parity = (a.dom_gap() - a.img_gap()) % 2 == 0;
  auto hat_image_of_one_is_odd = [&a]() { return hat(a)[1] % 2 == 1; };

  if (f.orientation_preserving) {
    if (n % 2 == 0) {
      return same_parity;
    }
    return same_parity == hat_image_of_one_is_odd();
  }

  // strictly orientation-reversing
  switch (n % 4) {
    case 0: return !same_parity;
    case 1: return same_parity != hat_image_of_one_is_odd();
    case 2: return same_parity;
    default: return same_parity == hat_image_of_one_is_odd();
  }
}

PartialPerm flank_left(PartialPerm const& a) {
  int n = a.degree();
  if (a.rank() != n - 1) {
    throw std::invalid_argument("flank maps require rank n - 1");
  }
  return PartialPerm::order_iso(n, full_mask(n - 1), a.dom_mask());
}

PartialPerm flank_right(PartialPerm const& a) {
  int n = a.degree();
  if (a.rank() != n - 1) {
    throw std::invalid_argument("flank maps require rank n - 1");
  }
  return PartialPerm::order_iso(n, a.img_mask(), full_mask(n - 1));
}

PartialPerm hat(PartialPerm const& a) {
  return flank_left(a) * a * flank_right(a);
}

std::vector<Permutation> unit_group(MonoidKind kind, int n) {
  check_chain_degree(n);
  std::vector<Permutation> out;
  auto rotations = [&](int step) {
    for (int k = 0; k < n; k += step) {
      out.push_back(rotation(n, k));
    }
  };
  auto reflections = [&](int start, int step) {
    for (int k = start; k < n; k += step) {
      out.push_back(reflection(n, k));
    }
  };
  switch (kind) {
    case MonoidKind::POPIn:
      rotations(1);
      break;
    case MonoidKind::PORIn:
      rotations(1);
      reflections(0, 1);
      break;
    case MonoidKind::AOPn:
      rotations(n % 2 == 1 ? 1 : 2);
      break;
    case MonoidKind::AORn:
      switch (n % 4) {
        case 0:
          rotations(2);
          reflections(0, 2);
          break;
        case 1:
          rotations(1);
          reflections(0, 1);
          break;
        case 2:
          rotations(2);
          reflections(1, 2);
          break;
        default:
          rotations(1);
          break;
      }
      break;
    default:
      throw std::invalid_argument("unit_group only handles popi, pori, aop, aor");
  }
  return out;
}

}  // namespace aoperm
