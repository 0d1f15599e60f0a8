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
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "aoperm/gens.hpp"
#include "aoperm/pperm.hpp"
#include "test-helpers.hpp"

namespace aoperm {

using test::all_pperms;
using test::random_pperm;

TEST_CASE("pperm: compose basics", "[quick][pperm]") {
  REQUIRE(parse_pperm(3, "1->2") * parse_pperm(3, "2->3")
          == parse_pperm(3, "1->3"));

  PartialPerm const empty5(5);
  REQUIRE(empty5 * parse_pperm(5, "1->2,2->3") == empty5);
  REQUIRE(parse_pperm(5, "1->2,2->3") * empty5 == empty5);

  PartialPerm const g = realize({GenName::g}, 5);
  REQUIRE(g * g.inverse() == PartialPerm::identity(5));

  REQUIRE_THROWS_AS(parse_pperm(3, "1->2") * parse_pperm(4, "1->2"),
                    std::invalid_argument);
}

TEST_CASE("pperm: inverse", "[quick][pperm]") {
  REQUIRE(parse_pperm(4, "2->4,3->1").inverse()
          == parse_pperm(4, "1->3,4->2"));
  REQUIRE(PartialPerm(4).inverse() == PartialPerm(4));
  PartialPerm const e = PartialPerm::partial_identity(4, 0b101);
  REQUIRE(e.inverse() == e);
}

TEST_CASE("pperm: completion", "[quick][pperm]") {
  // the missing domain point is forced onto the missing image point
  REQUIRE(completion(parse_pperm(4, "2->1,3->2,4->4"))
          == Permutation(4, {3, 1, 2, 4}));
  REQUIRE(completion(parse_pperm(3, "1->1,2->2")) == Permutation::identity(3));

  // the completion of the (n-1)-cycle on {1..n-1} fixes n
  REQUIRE(completion(realize({GenName::gn}, 5)) == Permutation(5, {2, 3, 4, 1, 5}));

  REQUIRE_THROWS_AS(completion(PartialPerm::identity(4)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(completion(parse_pperm(4, "1->1")), std::invalid_argument);
}

TEST_CASE("pperm: sign", "[quick][pperm]") {
  REQUIRE(sign(Permutation::identity(5)) == +1);
  REQUIRE(sign(Permutation::from_partial(realize({GenName::g}, 4))) == -1);
  REQUIRE(sign(Permutation::from_partial(realize({GenName::g}, 5))) == +1);

  // multiplicativity over random pairs
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation const p = Permutation::from_partial(random_pperm(6, 6, rng));
    Permutation const q = Permutation::from_partial(random_pperm(6, 6, rng));
    REQUIRE(sign(p * q) == sign(p) * sign(q));
  }
}

TEST_CASE("pperm: power", "[quick][pperm]") {
  PartialPerm const g = realize({GenName::g}, 5);
  REQUIRE(pow(g, 5) == PartialPerm::identity(5));

  PartialPerm const gn = realize({GenName::gn}, 5);
  REQUIRE(pow(gn, 4) == PartialPerm::partial_identity(5, 0b01111));

  PartialPerm const hngn = realize({GenName::hngn}, 7);
  REQUIRE(pow(hngn, 2) == PartialPerm::partial_identity(7, 0b0111111));

  REQUIRE(pow(g, 0) == PartialPerm::identity(5));
  REQUIRE_THROWS_AS(pow(gn, 0), std::invalid_argument);
}

TEST_CASE("pperm: parse and format", "[quick][pperm]") {
  REQUIRE(format_pperm(parse_pperm(4, "2->4,3->1,4->2")) == "2->4,3->1,4->2");
  REQUIRE(parse_pperm(4, "{}") == PartialPerm(4));
  REQUIRE(format_pperm(PartialPerm(4)) == "{}");
  REQUIRE(parse_pperm(3, "1->1,2->2,3->3") == PartialPerm::identity(3));

  REQUIRE_THROWS_AS(parse_pperm(4, "1->2,1->3"), ParseError);
  REQUIRE_THROWS_AS(parse_pperm(4, "1->2,3->2"), ParseError);
  REQUIRE_THROWS_AS(parse_pperm(4, "1->5"), ParseError);
  REQUIRE_THROWS_AS(parse_pperm(4, "1->"), ParseError);
  try {
    parse_pperm(4, "1->2,1->3");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    REQUIRE(e.position() == 5);
  }

  // round trip over everything small
  for (auto const& a : all_pperms(4)) {
    REQUIRE(parse_pperm(4, format_pperm(a)) == a);
  }
}

TEST_CASE("pperm: associativity", "[pperm]") {
  auto const pool = all_pperms(3);
  for (auto const& a : pool) {
    for (auto const& b : pool) {
      for (auto const& c : pool) {
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    PartialPerm const a = random_pperm(7, rng() % 8, rng);
    PartialPerm const b = random_pperm(7, rng() % 8, rng);
    PartialPerm const c = random_pperm(7, rng() % 8, rng);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("pperm: inverse-semigroup laws", "[pperm]") {
  for (auto const& a : all_pperms(4)) {
    PartialPerm const ai = a.inverse();
    REQUIRE(a * ai * a == a);
    REQUIRE(ai * a * ai == ai);
    REQUIRE(a * ai == PartialPerm::partial_identity(4, a.dom_mask()));
  }
}

TEST_CASE("pperm: completion is multiplicative on rank n-1 products",
          "[pperm]") {
  for (int n : {4, 5}) {
    std::vector<PartialPerm> slice;
    for (auto const& a : all_pperms(n)) {
      if (a.rank() == n - 1) {
        slice.push_back(a);
      }
    }
    for (auto const& a : slice) {
      for (auto const& b : slice) {
        PartialPerm const ab = a * b;
        if (ab.rank() == n - 1) {
          REQUIRE(completion(ab) == completion(a) * completion(b));
        }
      }
    }
  }
}

TEST_CASE("pperm: rank monotonicity", "[quick][pperm]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    PartialPerm const a = random_pperm(6, rng() % 7, rng);
    PartialPerm const b = random_pperm(6, rng() % 7, rng);
    REQUIRE((a * b).rank() <= std::min(a.rank(), b.rank()));
  }
}

TEST_CASE("pperm: gaps", "[quick][pperm]") {
  PartialPerm const a = parse_pperm(4, "2->1,3->2,4->4");
  REQUIRE(a.dom_gap() == 1);
  REQUIRE(a.img_gap() == 3);
  REQUIRE_THROWS_AS(PartialPerm::identity(4).dom_gap(), std::invalid_argument);
}

}  // namespace aoperm
