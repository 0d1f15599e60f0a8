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

#ifndef AOPERM_TESTS_HELPERS_HPP_
#define AOPERM_TESTS_HELPERS_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "aoperm/pperm.hpp"

namespace aoperm {
namespace test {

// Brute-force enumeration of every partial permutation of degree n, by
// deciding each point independently. This is the test-side ground truth and
// deliberately shares no code with the library's enumeration.
inline std::vector<PartialPerm> all_pperms(int n) {
  std::vector<PartialPerm> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(int, uint32_t)> rec = [&](int x, uint32_t used) {
    if (x > n) {
      out.emplace_back(n, cur);
      return;
    }
    rec(x + 1, used);
    for (int y = 1; y <= n; ++y) {
      if (!((used >> (y - 1)) & 1u)) {
        cur.emplace_back(x, y);
        rec(x + 1, used | (1u << (y - 1)));
        cur.pop_back();
      }
    }
  };
  rec(1, 0);
  return out;
}

// All oriented bijections between two equally sized point sets: the k
// rotations and k reflections of the order-preserving one (which coincide
// for k <= 2). Independent of the library's membership code.
inline std::vector<PartialPerm> oriented_maps(int n, uint32_t dmask,
                                              uint32_t imask) {
  std::vector<int> dom, img;
  for (uint32_t m = dmask; m != 0; m &= m - 1) {
    dom.push_back(__builtin_ctz(m) + 1);
  }
  for (uint32_t m = imask; m != 0; m &= m - 1) {
    img.push_back(__builtin_ctz(m) + 1);
  }
  int const k = static_cast<int>(dom.size());
  std::vector<PartialPerm> out;
  for (int r = 0; r < k; ++r) {
    std::vector<std::pair<int, int>> rot, refl;
    for (int j = 0; j < k; ++j) {
      rot.emplace_back(dom[j], img[(j + r) % k]);
      refl.emplace_back(dom[j], img[((r - j) % k + k) % k]);
    }
    out.emplace_back(n, rot);
    out.emplace_back(n, refl);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All total permutations of degree n.
inline std::vector<PartialPerm> all_perms(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) {
    img[i] = i + 1;
  }
  std::vector<PartialPerm> out;
  do {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      pairs.emplace_back(i + 1, img[i]);
    }
    out.emplace_back(n, pairs);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// A uniformly random partial permutation of degree n with the given rank.
inline PartialPerm random_pperm(int n, int rank, std::mt19937_64& rng) {
  std::vector<int> points(n);
  for (int i = 0; i < n; ++i) {
    points[i] = i + 1;
  }
  std::vector<int> dom = points, img = points;
  std::shuffle(dom.begin(), dom.end(), rng);
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < rank; ++i) {
    pairs.emplace_back(dom[i], img[i]);
  }
  return PartialPerm(n, pairs);
}

}  // namespace test
}  // namespace aoperm

#endif  // AOPERM_TESTS_HELPERS_HPP_
