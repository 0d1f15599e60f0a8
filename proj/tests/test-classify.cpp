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

#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "aoperm/classify.hpp"
#include "aoperm/gens.hpp"
#include "test-helpers.hpp"

namespace aoperm {

using test::all_perms;
using test::all_pperms;
using test::oriented_maps;

namespace {

uint32_t full_mask(int n) {
  return (1u << n) - 1;
}

uint32_t co_mask(int n, int missing) {
  return full_mask(n) & ~(1u << (missing - 1));
}

}  // namespace

TEST_CASE("classify: orientation flags", "[quick][classify]") {
  auto const f1 = orient_flags(parse_pperm(5, "1->2,3->5,4->1"));
  REQUIRE(f1.orientation_preserving);  // the only cyclic descent is 5 > 1

  auto const f2 = orient_flags(parse_pperm(4, "1->1,2->2,3->3"));
  REQUIRE(f2.order_preserving);
  REQUIRE(f2.orientation_preserving);
  REQUIRE_FALSE(f2.order_reversing);
  REQUIRE_FALSE(f2.orientation_reversing);

  // every rank <= 2 element carries both orientation flags
  for (auto const& a : all_pperms(4)) {
    if (a.rank() <= 2) {
      auto const f = orient_flags(a);
      REQUIRE(f.orientation_preserving);
      REQUIRE(f.orientation_reversing);
    }
  }

  // monotone implies oriented
  for (auto const& a : all_pperms(5)) {
    auto const f = orient_flags(a);
    if (f.order_preserving) {
      REQUIRE(f.orientation_preserving);
    }
    if (f.order_reversing) {
      REQUIRE(f.orientation_reversing);
    }
  }
}

TEST_CASE("classify: membership oracle examples", "[quick][classify]") {
  REQUIRE(member_oracle(parse_pperm(4, "2->1,3->2,4->4"), MonoidKind::AOPn));
  REQUIRE_FALSE(
      member_oracle(parse_pperm(5, "2->1,3->3,4->4,5->5"), MonoidKind::AOPn));
  for (auto const& a : all_pperms(3)) {
    if (a.rank() <= 1) {
      REQUIRE(member_oracle(a, MonoidKind::AIn));
    }
  }
}

TEST_CASE("classify: flank maps", "[quick][classify]") {
  PartialPerm const a = PartialPerm::order_iso(5, 0b11110, 0b11110);
  REQUIRE(flank_left(a) == parse_pperm(5, "1->2,2->3,3->4,4->5"));

  PartialPerm const b = PartialPerm::order_iso(5, 0b11101, 0b11101);
  REQUIRE(flank_right(b) == parse_pperm(5, "1->1,3->2,4->3,5->4"));

  PartialPerm const c = PartialPerm::partial_identity(4, 0b0111);
  REQUIRE(flank_left(c) == c);
  REQUIRE(flank_right(c) == c);

  REQUIRE_THROWS_AS(flank_left(PartialPerm::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("classify: hat normal form", "[quick][classify]") {
  PartialPerm const e = PartialPerm::partial_identity(5, 0b11110);
  REQUIRE(hat(e) == PartialPerm::partial_identity(5, 0b01111));
  REQUIRE(hat(e)[1] == 1);

  PartialPerm const gn = realize({GenName::gn}, 5);
  REQUIRE(hat(gn) == gn);

  // distinct gap parities with an odd hat image of 1: excluded from AOP_5
  PartialPerm const a = parse_pperm(5, "2->1,3->3,4->4,5->5");
  REQUIRE(hat(a)[1] == 1);
  REQUIRE_FALSE(member_fast(a, MonoidKind::AOPn));
}

TEST_CASE("classify: fast membership examples", "[quick][classify]") {
  // order-preserving, d = 1, i = 3, n even: same parity
  PartialPerm const a = PartialPerm::order_iso(4, co_mask(4, 1), co_mask(4, 3));
  REQUIRE(member_fast(a, MonoidKind::AOPn));

  // orientation-reversing with equal gaps at n = 0 mod 4: excluded
  PartialPerm const b = parse_pperm(4, "2->4,3->3,4->2");
  REQUIRE(orient_flags(b).orientation_reversing);
  REQUIRE(b.dom_gap() == 1);
  REQUIRE(b.img_gap() == 1);
  REQUIRE_FALSE(member_fast(b, MonoidKind::AORn));

  REQUIRE(member_fast(PartialPerm::partial_identity(5, 0b11110),
                      MonoidKind::AOPn));

  REQUIRE_THROWS_AS(member_fast(a, MonoidKind::POIn), std::invalid_argument);
}

TEST_CASE("classify: fast membership equals the oracle", "[classify]") {
  for (int n : {3, 4, 5, 6}) {
    for (auto const& a : all_pperms(n)) {
      REQUIRE(member_fast(a, MonoidKind::AOPn)
              == member_oracle(a, MonoidKind::AOPn));
      REQUIRE(member_fast(a, MonoidKind::AORn)
              == member_oracle(a, MonoidKind::AORn));
    }
  }
  // degree 7 and 8: the top two rank levels, where the parity rules live
  for (int n : {7, 8}) {
    for (int d = 1; d <= n; ++d) {
      for (int i = 1; i <= n; ++i) {
        for (auto const& a : oriented_maps(n, co_mask(n, d), co_mask(n, i))) {
          REQUIRE(member_fast(a, MonoidKind::AOPn)
                  == member_oracle(a, MonoidKind::AOPn));
          REQUIRE(member_fast(a, MonoidKind::AORn)
                  == member_oracle(a, MonoidKind::AORn));
        }
      }
    }
    for (auto const& a : oriented_maps(n, full_mask(n), full_mask(n))) {
      REQUIRE(member_fast(a, MonoidKind::AOPn)
              == member_oracle(a, MonoidKind::AOPn));
      REQUIRE(member_fast(a, MonoidKind::AORn)
              == member_oracle(a, MonoidKind::AORn));
    }
  }
}

TEST_CASE("classify: order-preserving corank-1 members need equal gap parity",
          "[classify]") {
  for (int n = 4; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (int i = 1; i <= n; ++i) {
        PartialPerm const a
            = PartialPerm::order_iso(n, co_mask(n, d), co_mask(n, i));
        REQUIRE(member_oracle(a, MonoidKind::AOn) == ((d - i) % 2 == 0));
      }
    }
  }
}

TEST_CASE("classify: even powers of the corank-1 cycle's completion",
          "[classify]") {
  for (int n = 4; n <= 8; ++n) {
    Permutation const base = completion(realize({GenName::gn}, n));
    Permutation p = Permutation::identity(n);
    for (int k = 0; k <= n - 2; ++k) {
      bool const expect_even = n % 2 == 0 || k % 2 == 0;
      REQUIRE((sign(p) == +1) == expect_even);
      p = p * base;
    }
  }
}

TEST_CASE("classify: hat of a strictly reversing corank-1 map", "[classify]") {
  // the four-way table by n mod 4 for whether the normal form itself is a
  // member
  for (int n = 4; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (int i = 1; i <= n; ++i) {
        for (auto const& a : oriented_maps(n, co_mask(n, d), co_mask(n, i))) {
          auto const f = orient_flags(a);
          if (f.orientation_preserving || !f.orientation_reversing) {
            continue;
          }
          PartialPerm const ha = hat(a);
          bool const member = member_oracle(ha, MonoidKind::AORn);
          switch (n % 4) {
            case 0: REQUIRE_FALSE(member); break;
            case 1: REQUIRE(member == (ha[1] % 2 == 0)); break;
            case 2: REQUIRE(member); break;
            default: REQUIRE(member == (ha[1] % 2 == 1)); break;
          }
        }
      }
    }
  }
}

TEST_CASE("classify: low ranks are absorbed", "[quick][classify]") {
  for (auto const& a : all_pperms(5)) {
    if (a.rank() > 3) {
      continue;
    }
    auto const f = orient_flags(a);
    if (f.orientation_preserving) {
      REQUIRE(member_fast(a, MonoidKind::AOPn));
    }
    if (f.oriented()) {
      REQUIRE(member_fast(a, MonoidKind::AORn));
    }
  }
}

TEST_CASE("classify: unit groups", "[classify]") {
  for (int n = 4; n <= 7; ++n) {
    for (MonoidKind kind : {MonoidKind::POPIn, MonoidKind::PORIn,
                            MonoidKind::AOPn, MonoidKind::AORn}) {
      std::set<PartialPerm> brute;
      for (auto const& p : all_perms(n)) {
        if (member_oracle(p, kind)) {
          brute.insert(p);
        }
      }
      std::set<PartialPerm> built;
      for (auto const& u : unit_group(kind, n)) {
        built.insert(u.to_partial());
      }
      REQUIRE(built == brute);
    }
  }
  REQUIRE(unit_group(MonoidKind::AOPn, 4).size() == 2);
  REQUIRE(unit_group(MonoidKind::AORn, 4).size() == 4);
  REQUIRE(unit_group(MonoidKind::AORn, 7).size() == 7);
  REQUIRE(unit_group(MonoidKind::AORn, 5).size() == 10);
  REQUIRE(unit_group(MonoidKind::AORn, 6).size() == 6);
}

}  // namespace aoperm
