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

#include "aoperm/congruence.hpp"
#include "aoperm/gens.hpp"
#include "test-helpers.hpp"

namespace aoperm {

using test::oriented_maps;

namespace {

Ideal const& ideal_by_label(std::vector<Ideal> const& ideals,
                            std::string const& label) {
  for (auto const& ideal : ideals) {
    if (ideal.label == label) {
      return ideal;
    }
  }
  throw std::logic_error("no ideal labeled " + label);
}

std::set<Congruence> as_set(std::vector<LabeledCongruence> const& list) {
  std::set<Congruence> out;
  for (auto const& lc : list) {
    out.insert(lc.congruence);
  }
  return out;
}

}  // namespace

TEST_CASE("congruence: canonical partitions", "[quick][congruence]") {
  Congruence const a = Congruence::from_block_of({7, 7, 3, 3, 9});
  Congruence const b = Congruence::from_block_of({0, 0, 1, 1, 2});
  REQUIRE(a == b);
  REQUIRE(a.block_count() == 3);
  REQUIRE(a.related(0, 1));
  REQUIRE_FALSE(a.related(1, 2));

  Congruence const id = Congruence::identity_congruence(5);
  Congruence const univ = Congruence::universal_congruence(5);
  REQUIRE(id.refines(a));
  REQUIRE(a.refines(univ));
  REQUIRE_FALSE(a.refines(id));
  REQUIRE(join(a, id) == a);
  REQUIRE(join(a, univ) == univ);
}

TEST_CASE("congruence: rees congruences", "[quick][congruence]") {
  MonoidSet const M = enumerate(MonoidKind::AOPn, 4);
  auto const all = ideals(M);

  Congruence const bottom = rees_congruence(M, ideal_by_label(all, "I0"));
  REQUIRE(bottom == Congruence::identity_congruence(M.size()));

  Congruence const top = rees_congruence(M, ideal_by_label(all, "I4"));
  REQUIRE(top == Congruence::universal_congruence(M.size()));

  for (auto const& ideal : all) {
    REQUIRE(is_congruence(M, rees_congruence(M, ideal)));
  }

  Ideal bogus;
  bogus.member.assign(M.size(), 0);
  bogus.member[M.identity_index()] = 1;
  bogus.size = 1;
  REQUIRE_THROWS_AS(rees_congruence(M, bogus), std::invalid_argument);
}

TEST_CASE("congruence: group congruences of known groups",
          "[quick][congruence]") {
  // a cyclic group of order 6: congruences match the divisors
  {
    MonoidSet const M = closure(7, {realize({GenName::gn}, 7)});
    std::vector<element_index> h;
    for (element_index e = 0; e < M.size(); ++e) {
      if (M.at(e).rank() == 6) {
        h.push_back(e);
      }
    }
    REQUIRE(h.size() == 6);
    auto const rhos = group_congruences(M, h);
    REQUIRE(rhos.size() == 4);
    std::multiset<size_t> sizes;
    for (auto const& rho : rhos) {
      sizes.insert(rho.normal_subgroup.size());
    }
    REQUIRE(sizes == std::multiset<size_t>{1, 2, 3, 6});
  }
  // a dihedral group of order 10 (odd half): only the rotation subgroups
  {
    MonoidSet const M
        = closure(6, {realize({GenName::gn}, 6), realize({GenName::hn}, 6)});
    std::vector<element_index> h;
    for (element_index e = 0; e < M.size(); ++e) {
      if (M.at(e).rank() == 5) {
        h.push_back(e);
      }
    }
    REQUIRE(h.size() == 10);
    auto const rhos = group_congruences(M, h);
    REQUIRE(rhos.size() == 3);
  }
  // the Klein group: all five subgroups are normal
  {
    MonoidSet const M
        = closure(4, {realize({GenName::g2}, 4), realize({GenName::h}, 4)});
    REQUIRE(M.size() == 4);
    std::vector<element_index> h{0, 1, 2, 3};
    auto const rhos = group_congruences(M, h);
    REQUIRE(rhos.size() == 5);
  }
}

TEST_CASE("congruence: normalization laws on small degrees", "[congruence]") {
  for (auto [kind, n] :
       {std::pair{MonoidKind::AOPn, 4}, std::pair{MonoidKind::AOPn, 5},
        std::pair{MonoidKind::AORn, 4}, std::pair{MonoidKind::AORn, 5}}) {
    MonoidSet const M = enumerate(kind, n);
    GreenStructure const G = green_classes(M);
    for (uint32_t j = 0; j < G.j_info.size(); ++j) {
      if (G.j_info[j].rank < 1 || G.j_info[j].rank > n - 1) {
        continue;
      }
      TildeMap const tm = tilde_map(M, G, j);
      std::vector<element_index> sorted_h = tm.anchor_h_class;
      std::sort(sorted_h.begin(), sorted_h.end());

      for (size_t p = 0; p < tm.members.size(); ++p) {
        element_index const e = tm.members[p];
        // the normalization lands in the anchor H-class
        REQUIRE(std::binary_search(sorted_h.begin(), sorted_h.end(),
                                   tm.tilde[p]));
        // R-related members share the left flank, L-related the right
        for (size_t q = 0; q < tm.members.size(); ++q) {
          element_index const f = tm.members[q];
          if (G.r_of[e] == G.r_of[f]) {
            REQUIRE(tm.tilde_left[p] == tm.tilde_left[q]);
          }
          if (G.l_of[e] == G.l_of[f]) {
            REQUIRE(tm.tilde_right[p] == tm.tilde_right[q]);
          }
        }
        // the inverse's right flank is the left flank's inverse
        element_index const einv = M.inv(e);
        auto it = std::lower_bound(tm.members.begin(), tm.members.end(), einv);
        REQUIRE(it != tm.members.end());
        size_t const pinv = static_cast<size_t>(it - tm.members.begin());
        REQUIRE(tm.tilde_right[pinv] == tm.tilde_left[p].inverse());
      }

      // multiplicativity on in-class products
      std::vector<std::vector<element_index>> by_dom_mask(1u << n);
      for (element_index e : tm.members) {
        by_dom_mask[M.at(e).dom_mask()].push_back(e);
      }
      for (size_t p = 0; p < tm.members.size(); ++p) {
        element_index const e = tm.members[p];
        for (element_index f : by_dom_mask[M.at(e).img_mask()]) {
          element_index const ef = M.mul(e, f);
          if (G.j_of[ef] != j) {
            continue;
          }
          REQUIRE(tm.tilde_of(M, ef)
                  == M.mul(tm.tilde_of(M, e), tm.tilde_of(M, f)));
        }
      }

      // the two H-class maps are mutually inverse bijections
      for (size_t p = 0; p < tm.members.size(); ++p) {
        element_index const e = tm.members[p];
        PartialPerm const li = tm.tilde_left[p].inverse();
        PartialPerm const ri = tm.tilde_right[p].inverse();
        std::set<element_index> image;
        for (element_index x : G.h_members[G.h_of[e]]) {
          element_index tx = tm.tilde_of(M, x);
          image.insert(tx);
          REQUIRE(M.index_of(li * M.at(tx) * ri) == x);
        }
        REQUIRE(image.size() == G.h_members[G.h_of[e]].size());
      }
    }
  }
}

TEST_CASE("congruence: pi and theta families", "[congruence]") {
  MonoidSet const M = enumerate(MonoidKind::AOPn, 4);
  GreenStructure const G = green_classes(M);
  auto const all = ideals(M);

  auto find_class = [&](int rank, GapTag tag) -> uint32_t {
    for (uint32_t j = 0; j < G.j_info.size(); ++j) {
      if (G.j_info[j].rank == rank && G.j_info[j].tag == tag) {
        return j;
      }
    }
    throw std::logic_error("no such class");
  };

  // the pi of the rank-1 class with the trivial group congruence is the
  // identity congruence
  {
    TildeMap const tm = tilde_map(M, G, find_class(1, GapTag::none));
    auto const rhos = group_congruences(M, tm.anchor_h_class);
    REQUIRE(rhos.size() == 1);
    REQUIRE(build_pi(M, G, tm, rhos.front())
            == Congruence::identity_congruence(M.size()));
  }

  // the pi of the unit class with the trivial group congruence collapses
  // everything below the units
  {
    TildeMap const tm = tilde_map(M, G, find_class(4, GapTag::none));
    auto const rhos = group_congruences(M, tm.anchor_h_class);
    REQUIRE(build_pi(M, G, tm, rhos.front())
            == rees_congruence(M, ideal_by_label(all, "I3")));
  }

  // both trivial thetas at the split level union to the Rees congruence of
  // the ideal below them
  {
    TildeMap const tmo = tilde_map(M, G, find_class(3, GapTag::odd));
    TildeMap const tme = tilde_map(M, G, find_class(3, GapTag::even));
    auto const rhos_o = group_congruences(M, tmo.anchor_h_class);
    auto const rhos_e = group_congruences(M, tme.anchor_h_class);
    REQUIRE(build_theta_union(M, G, tmo, rhos_o.front(), tme, rhos_e.front())
            == rees_congruence(M, ideal_by_label(all, "I2")));
    // a trivial odd part reduces the union to the even theta
    for (auto const& rho_e : rhos_e) {
      REQUIRE(build_theta_union(M, G, tmo, rhos_o.front(), tme, rho_e)
              == build_theta(M, G, tme, rho_e));
    }
    // theta refines pi
    for (auto const& rho_e : rhos_e) {
      REQUIRE(build_theta(M, G, tme, rho_e)
                  .refines(build_pi(M, G, tme, rho_e)));
    }
  }
}

TEST_CASE("congruence: constructive families are congruences", "[congruence]") {
  for (auto [kind, n] :
       {std::pair{MonoidKind::AOPn, 4}, std::pair{MonoidKind::AOPn, 5},
        std::pair{MonoidKind::AORn, 4}, std::pair{MonoidKind::AORn, 5}}) {
    MonoidSet const M = enumerate(kind, n);
    auto const list = enumerate_congruences_constructive(M);
    for (auto const& lc : list) {
      REQUIRE(is_congruence(M, lc.congruence));
    }
  }
}

TEST_CASE("congruence: classification counts", "[quick][congruence]") {
  REQUIRE(
      enumerate_congruences_constructive(enumerate(MonoidKind::AOPn, 3)).size()
      == 5);
  REQUIRE(
      enumerate_congruences_constructive(enumerate(MonoidKind::AOPn, 4)).size()
      == 14);
  REQUIRE(
      enumerate_congruences_constructive(enumerate(MonoidKind::AORn, 4)).size()
      == 11);
  REQUIRE_THROWS_AS(
      enumerate_congruences_constructive(enumerate(MonoidKind::POPIn, 4)),
      std::invalid_argument);
}

TEST_CASE("congruence: oracle on small monoids", "[congruence]") {
  // order-preserving case: nothing but the Rees congruences
  for (int n : {4, 5}) {
    MonoidSet const M = enumerate(MonoidKind::AOn, n);
    auto const lattice = congruence_lattice_oracle(M);
    REQUIRE(lattice.size() == static_cast<size_t>(n) + 3);
    std::set<Congruence> rees_set;
    for (auto const& ideal : ideals(M)) {
      rees_set.insert(rees_congruence(M, ideal));
    }
    rees_set.insert(Congruence::identity_congruence(M.size()));
    // I0 is the empty-map singleton, whose Rees congruence is the identity
    REQUIRE(rees_set.size() == static_cast<size_t>(n) + 3);
    REQUIRE(std::set<Congruence>(lattice.begin(), lattice.end()) == rees_set);
  }

  // oriented cases: the constructive classification is exactly the lattice
  for (auto [kind, n] :
       {std::pair{MonoidKind::AOPn, 3}, std::pair{MonoidKind::AOPn, 4},
        std::pair{MonoidKind::AORn, 4}}) {
    MonoidSet const M = enumerate(kind, n);
    auto const lattice = congruence_lattice_oracle(M);
    REQUIRE(as_set(enumerate_congruences_constructive(M))
            == std::set<Congruence>(lattice.begin(), lattice.end()));
    for (auto const& c : lattice) {
      REQUIRE(is_congruence(M, c));
    }
  }
}

TEST_CASE("congruence: oracle is deterministic and join-closed",
          "[congruence]") {
  MonoidSet const M = enumerate(MonoidKind::AOPn, 3);
  auto const a = congruence_lattice_oracle(M);
  auto const b = congruence_lattice_oracle(M);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i] == b[i]);
  }
  REQUIRE(std::count(a.begin(), a.end(),
                     Congruence::identity_congruence(M.size()))
          == 1);
  REQUIRE(std::count(a.begin(), a.end(),
                     Congruence::universal_congruence(M.size()))
          == 1);
  for (auto const& x : a) {
    for (auto const& y : a) {
      Congruence const j = join(x, y);
      REQUIRE(std::count(a.begin(), a.end(), j) == 1);
      REQUIRE(is_congruence(M, j));
    }
  }
}

TEST_CASE("congruence: principal congruences seed the lattice",
          "[quick][congruence]") {
  MonoidSet const M = enumerate(MonoidKind::AOPn, 3);
  Congruence const c = principal_congruence(M, 0, 1);
  REQUIRE(is_congruence(M, c));
  REQUIRE(c.related(0, 1));
  Congruence const universal
      = principal_congruence(M, M.identity_index(), 0);
  REQUIRE(universal == Congruence::universal_congruence(M.size()));
}

TEST_CASE("congruence: lattice dot", "[quick][congruence]") {
  MonoidSet const M = enumerate(MonoidKind::AOPn, 3);
  auto const list = enumerate_congruences_constructive(M);
  std::string const dot = lattice_dot(list);
  REQUIRE(dot.find("identity / 22 blocks") != std::string::npos);
  REQUIRE(dot.find("universal / 1 blocks") != std::string::npos);
  // a 5-element chain lattice has 4 covers
  REQUIRE(std::count(dot.begin(), dot.end(), '>') == 4);
}

TEST_CASE("congruence: separation of H-related oriented maps",
          "[congruence]") {
  // distinct H-related maps of rank >= 2 are told apart by deleting the
  // least or greatest domain point
  for (int n = 4; n <= 6; ++n) {
    for (uint32_t dmask = 0; dmask < (1u << n); ++dmask) {
      int const k = __builtin_popcount(dmask);
      if (k < 2) {
        continue;
      }
      for (uint32_t imask = 0; imask < (1u << n); ++imask) {
        if (__builtin_popcount(imask) != k) {
          continue;
        }
        auto const maps = oriented_maps(n, dmask, imask);
        int const lo = __builtin_ctz(dmask) + 1;
        int const hi = 31 - __builtin_clz(dmask) + 1;
        uint32_t const no_lo = dmask & ~(1u << (lo - 1));
        uint32_t const no_hi = dmask & ~(1u << (hi - 1));
        PartialPerm const emin = PartialPerm::partial_identity(n, no_lo);
        PartialPerm const emax = PartialPerm::partial_identity(n, no_hi);
        for (auto const& a : maps) {
          for (auto const& b : maps) {
            if (a == b) {
              continue;
            }
            bool const separated
                = (emin * a).img_mask() != (emin * b).img_mask()
                  || (emax * a).img_mask() != (emax * b).img_mask();
            REQUIRE(separated);
          }
        }
      }
    }
  }
}

TEST_CASE("congruence: reflections and rotations move some deleted identity",
          "[quick][congruence]") {
  // non-identity dihedral elements never fix both probe points
  for (int n = 5; n <= 8; ++n) {
    for (auto const& u : unit_group(MonoidKind::PORIn, n)) {
      PartialPerm const s = u.to_partial();
      if (s.is_identity()) {
        continue;
      }
      auto fixes = [&](int p) {
        PartialPerm const probe
            = PartialPerm::partial_identity(n, ((1u << n) - 1) & ~(1u << (p - 1)));
        return (probe * s).img_mask() == probe.dom_mask();
      };
      REQUIRE((!fixes(1) || !fixes(3)));
      REQUIRE((!fixes(2) || !fixes(n)));
    }
  }
  // a rotated deleted identity keeps its image set only at rotation 0
  for (int n = 2; n <= 8; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 1; x <= n; ++x) {
      pairs.emplace_back(x, x % n + 1);
    }
    PartialPerm const rot(n, pairs);
    for (int i = 1; i <= n; ++i) {
      PartialPerm const probe
          = PartialPerm::partial_identity(n, ((1u << n) - 1) & ~(1u << (i - 1)));
      PartialPerm power = probe;
      for (int k = 0; k <= n - 1; ++k) {
        REQUIRE((power.img_mask() == probe.dom_mask()) == (k == 0));
        power = power * rot;
      }
    }
  }
}

}  // namespace aoperm
