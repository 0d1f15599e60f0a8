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

#include "aoperm/congruence.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace aoperm {

namespace {

uint32_t full_mask(int n) {
  return n == 32 ? 0xffffffffu : ((1u << n) - 1);
}

struct UnionFind {
  std::vector<uint32_t> parent;

  void reset(size_t n) {
    parent.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
      parent[i] = i;
    }
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // returns false when already merged
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent[b] = a;
    return true;
  }

  Congruence to_congruence() {
    std::vector<uint32_t> raw(parent.size());
    for (uint32_t e = 0; e < parent.size(); ++e) {
      raw[e] = find(e);
    }
    return Congruence::from_block_of(raw);
  }
};

// Seed-pair saturation shared by principal_congruence and the oracle: the
// one-sided generator multiplication tables are built once.
struct PairCloser {
  explicit PairCloser(MonoidSet const& M) : size_(M.size()) {
    auto const& gens = M.generator_ids();
    tables_.reserve(2 * gens.size());
    for (element_index g : gens) {
      std::vector<element_index> left(size_), right(size_);
      for (element_index e = 0; e < size_; ++e) {
        left[e] = M.mul(g, e);
        right[e] = M.mul(e, g);
      }
      tables_.push_back(std::move(left));
      tables_.push_back(std::move(right));
    }
  }

  Congruence close(element_index a, element_index b) {
    uf_.reset(size_);
    queue_.clear();
    queue_.emplace_back(a, b);
    size_t head = 0;
    while (head < queue_.size()) {
      auto [x, y] = queue_[head++];
      if (!uf_.unite(x, y)) {
        continue;
      }
      for (auto const& t : tables_) {
        queue_.emplace_back(t[x], t[y]);
      }
    }
    return uf_.to_congruence();
  }

 private:
  size_t size_;
  std::vector<std::vector<element_index>> tables_;
  UnionFind uf_;
  std::vector<std::pair<element_index, element_index>> queue_;
};

}  // namespace

Congruence Congruence::identity_congruence(size_t n) {
  Congruence c;
  c.block_of_.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    c.block_of_[i] = i;
  }
  c.n_blocks_ = static_cast<uint32_t>(n);
  return c;
}

Congruence Congruence::universal_congruence(size_t n) {
  Congruence c;
  c.block_of_.assign(n, 0);
  c.n_blocks_ = n == 0 ? 0 : 1;
  return c;
}

Congruence Congruence::from_block_of(std::vector<uint32_t> const& raw) {
  Congruence c;
  c.block_of_.resize(raw.size());
  std::unordered_map<uint32_t, uint32_t> relabel;
  relabel.reserve(raw.size());
  for (size_t e = 0; e < raw.size(); ++e) {
    auto it = relabel.emplace(raw[e], static_cast<uint32_t>(relabel.size())).first;
    c.block_of_[e] = it->second;
  }
  c.n_blocks_ = static_cast<uint32_t>(relabel.size());
  return c;
}

bool Congruence::refines(Congruence const& coarser) const {
  if (degree() != coarser.degree()) {
    return false;
  }
  std::vector<uint32_t> image(n_blocks_, UINT32_MAX);
  for (size_t e = 0; e < block_of_.size(); ++e) {
    uint32_t& img = image[block_of_[e]];
    if (img == UINT32_MAX) {
      img = coarser.block_of_[e];
    } else if (img != coarser.block_of_[e]) {
      return false;
    }
  }
  return true;
}

size_t Congruence::hash_value() const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t b : block_of_) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

bool is_congruence(MonoidSet const& M, Congruence const& c) {
  if (c.degree() != M.size()) {
    return false;
  }
  // representative check: with transitivity it suffices that every element
  // is compatible with its block representative
  std::vector<element_index> rep(c.block_count(), kNoElement);
  auto const& gens = M.generator_ids();
  for (element_index e = 0; e < M.size(); ++e) {
    element_index& r = rep[c.block_of(e)];
    if (r == kNoElement) {
      r = e;
      continue;
    }
    for (element_index g : gens) {
      if (!c.related(M.mul(g, e), M.mul(g, r))
          || !c.related(M.mul(e, g), M.mul(r, g))) {
        return false;
      }
    }
  }
  return true;
}

Congruence rees_congruence(MonoidSet const& M, Ideal const& ideal) {
  auto const& gens = M.generator_ids();
  element_index first = kNoElement;
  for (element_index e = 0; e < M.size(); ++e) {
    if (!ideal.member[e]) {
      continue;
    }
    if (first == kNoElement) {
      first = e;
    }
    for (element_index g : gens) {
      if (!ideal.member[M.mul(g, e)] || !ideal.member[M.mul(e, g)]) {
        throw std::invalid_argument("set is not an ideal: fails absorption");
      }
    }
  }
  std::vector<uint32_t> raw(M.size());
  for (element_index e = 0; e < M.size(); ++e) {
    raw[e] = ideal.member[e] ? first : e;
  }
  return Congruence::from_block_of(raw);
}

Congruence principal_congruence(MonoidSet const& M, element_index a,
                                element_index b) {
  PairCloser closer(M);
  return closer.close(a, b);
}

Congruence join(Congruence const& a, Congruence const& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot join partitions of different degrees");
  }
  UnionFind uf;
  uf.reset(a.degree());
  std::vector<uint32_t> first_a(a.block_count(), UINT32_MAX);
  std::vector<uint32_t> first_b(b.block_count(), UINT32_MAX);
  for (uint32_t e = 0; e < a.degree(); ++e) {
    uint32_t& fa = first_a[a.block_of(e)];
    if (fa == UINT32_MAX) {
      fa = e;
    } else {
      uf.unite(e, fa);
    }
    uint32_t& fb = first_b[b.block_of(e)];
    if (fb == UINT32_MAX) {
      fb = e;
    } else {
      uf.unite(e, fb);
    }
  }
  return uf.to_congruence();
}

element_index TildeMap::tilde_of(MonoidSet const&, element_index e) const {
  auto it = std::lower_bound(members.begin(), members.end(), e);
  if (it == members.end() || *it != e) {
    throw std::invalid_argument("element is not in the J-class");
  }
  return tilde[static_cast<size_t>(it - members.begin())];
}

TildeMap tilde_map(MonoidSet const& M, GreenStructure const& G,
                   uint32_t j_class) {
  int const n = M.degree();
  JClassInfo const& info = G.j_info.at(j_class);
  int const k = info.rank;
  if (k < 1) {
    throw std::invalid_argument("no normalization for the rank-0 class");
  }
  TildeMap tm;
  tm.j_class = j_class;
  tm.members = G.j_members[j_class];

  if (k == n) {
    // units: the identity normalization
    tm.anchor = M.identity_index();
    tm.anchor_h_class = tm.members;
    for (element_index e : tm.members) {
      tm.tilde_left.push_back(PartialPerm::identity(n));
      tm.tilde_right.push_back(PartialPerm::identity(n));
      tm.tilde.push_back(e);
    }
    return tm;
  }

  enum class Family { plain, even_side, odd_side, rot_twist, refl_twist };
  Family fam;
  uint32_t anchor_mask;
  if (k <= n - 2) {
    fam = Family::plain;
    anchor_mask = full_mask(k);
  } else {
    size_t classes_here = 0;
    for (auto const& other : G.j_info) {
      classes_here += other.rank == n - 1;
    }
    if (classes_here >= 2) {
      fam = info.tag == GapTag::odd ? Family::odd_side : Family::even_side;
      anchor_mask = info.tag == GapTag::odd ? full_mask(n) & ~1u
                                            : full_mask(n - 1);
    } else {
      fam = n % 2 == 1 ? Family::rot_twist : Family::refl_twist;
      anchor_mask = full_mask(n - 1);
    }
  }
  tm.anchor = M.index_of(PartialPerm::partial_identity(n, anchor_mask));
  tm.anchor_h_class = G.h_members[G.h_of[tm.anchor]];

  // the degree n-1 rotation and reflection used by the twisted families
  std::vector<std::pair<int, int>> rot_pairs, refl_pairs;
  for (int x = 1; x <= n - 1; ++x) {
    rot_pairs.emplace_back(x, x % (n - 1) + 1);
    refl_pairs.emplace_back(x, n - x);
  }
  PartialPerm const rot(n, rot_pairs);
  PartialPerm const rot_inv = rot.inverse();
  PartialPerm const refl(n, refl_pairs);

  for (element_index e : tm.members) {
    PartialPerm const& a = M.at(e);
    PartialPerm tl, tr;
    switch (fam) {
      case Family::plain:
      case Family::odd_side:
        tl = PartialPerm::order_iso(n, anchor_mask, a.dom_mask());
        tr = PartialPerm::order_iso(n, a.img_mask(), anchor_mask);
        break;
      case Family::even_side:
        tl = flank_left(a);
        tr = flank_right(a);
        break;
      case Family::rot_twist:
        tl = a.dom_gap() % 2 == 1 ? flank_left(a) : rot_inv * flank_left(a);
        tr = a.img_gap() % 2 == 1 ? flank_right(a) : flank_right(a) * rot;
        break;
      case Family::refl_twist:
        tl = a.dom_gap() % 2 == 0 ? flank_left(a) : refl * flank_left(a);
        tr = a.img_gap() % 2 == 0 ? flank_right(a) : flank_right(a) * refl;
        break;
    }
    tm.tilde_left.push_back(tl);
    tm.tilde_right.push_back(tr);
    tm.tilde.push_back(M.index_of(tl * a * tr));
  }
  return tm;
}

std::vector<GroupCongruence> group_congruences(
    MonoidSet const& M, std::vector<element_index> const& h_class) {
  std::vector<element_index> members = h_class;
  std::sort(members.begin(), members.end());

  element_index idem = kNoElement;
  for (element_index e : members) {
    if (M.at(e).is_partial_identity()) {
      idem = e;
      break;
    }
  }
  if (idem == kNoElement) {
    throw std::invalid_argument("H-class has no idempotent: not a group");
  }
  auto inside = [&](element_index e) {
    return std::binary_search(members.begin(), members.end(), e);
  };
  for (element_index a : members) {
    for (element_index b : members) {
      if (!inside(M.mul(a, b))) {
        throw std::invalid_argument("H-class is not closed under the product");
      }
    }
  }

  auto close_subgroup = [&](std::vector<element_index> seed) {
    std::vector<element_index> set = std::move(seed);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<element_index> fresh;
      for (element_index a : set) {
        for (element_index b : set) {
          element_index p = M.mul(a, b);
          if (!std::binary_search(set.begin(), set.end(), p)) {
            fresh.push_back(p);
          }
        }
      }
      if (!fresh.empty()) {
        grew = true;
        set.insert(set.end(), fresh.begin(), fresh.end());
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
      }
    }
    return set;
  };

  // grow known subgroups one element at a time until stable; this reaches
  // every subgroup
  std::vector<std::vector<element_index>> subgroups{{idem}};
  std::unordered_set<size_t> seen;
  auto key_of = [](std::vector<element_index> const& s) {
    uint64_t h = 14695981039346656037ull;
    for (element_index e : s) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  };
  seen.insert(key_of(subgroups[0]));
  for (size_t i = 0; i < subgroups.size(); ++i) {
    auto const current = subgroups[i];
    for (element_index x : members) {
      if (std::binary_search(current.begin(), current.end(), x)) {
        continue;
      }
      auto extended = current;
      extended.push_back(x);
      auto closed = close_subgroup(std::move(extended));
      if (seen.insert(key_of(closed)).second) {
        subgroups.push_back(std::move(closed));
      }
    }
  }

  // keep the conjugation-invariant ones
  std::vector<std::vector<element_index>> normals;
  for (auto const& sub : subgroups) {
    bool normal = true;
    for (element_index g : members) {
      element_index gi = M.inv(g);
      for (element_index s : sub) {
        if (!std::binary_search(sub.begin(), sub.end(),
                                M.mul(M.mul(gi, s), g))) {
          normal = false;
          break;
        }
      }
      if (!normal) {
        break;
      }
    }
    if (normal) {
      normals.push_back(sub);
    }
  }
  std::sort(normals.begin(), normals.end(),
            [](auto const& a, auto const& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  std::vector<GroupCongruence> out;
  for (size_t i = 0; i < normals.size(); ++i) {
    GroupCongruence gc;
    gc.h_class = members;
    gc.normal_subgroup = normals[i];
    gc.coset_of.assign(members.size(), UINT32_MAX);
    std::unordered_map<element_index, uint32_t> coset_key;
    for (size_t pos = 0; pos < members.size(); ++pos) {
      element_index min_elt = kNoElement;
      for (element_index s : normals[i]) {
        min_elt = std::min(min_elt, M.mul(members[pos], s));
      }
      gc.coset_of[pos] = coset_key
                             .emplace(min_elt,
                                      static_cast<uint32_t>(coset_key.size()))
                             .first->second;
    }
    gc.n_cosets = static_cast<uint32_t>(coset_key.size());
    gc.label = "|N|=" + std::to_string(normals[i].size());
    size_t same_size = 0, my_pos = 0;
    for (size_t j = 0; j < normals.size(); ++j) {
      if (normals[j].size() == normals[i].size()) {
        if (j == i) {
          my_pos = same_size;
        }
        ++same_size;
      }
    }
    if (same_size > 1) {
      gc.label += static_cast<char>('a' + my_pos);
    }
    out.push_back(std::move(gc));
  }
  return out;
}

namespace {

uint32_t coset_class_of(GroupCongruence const& rho, element_index e) {
  auto it = std::lower_bound(rho.h_class.begin(), rho.h_class.end(), e);
  if (it == rho.h_class.end() || *it != e) {
    throw std::invalid_argument(
        "group congruence is not over the anchor H-class");
  }
  return rho.coset_of[static_cast<size_t>(it - rho.h_class.begin())];
}

// elements of A(J) = {a : J_a < J} resp. B(J) = {a : J not <= J_a}
std::vector<char> ideal_below(MonoidSet const& M, GreenStructure const& G,
                              uint32_t j, bool use_b) {
  std::vector<char> out(M.size(), 0);
  for (element_index e = 0; e < M.size(); ++e) {
    uint32_t je = G.j_of[e];
    out[e] = use_b ? !G.j_leq[j][je] : (je != j && G.j_leq[je][j]);
  }
  return out;
}

Congruence build_block_congruence(MonoidSet const& M, GreenStructure const& G,
                                  TildeMap const& tm,
                                  GroupCongruence const& rho, bool use_b) {
  if (rho.h_class != tm.anchor_h_class) {
    throw std::invalid_argument(
        "group congruence is not over the anchor H-class");
  }
  std::vector<uint32_t> raw(M.size());
  for (element_index e = 0; e < M.size(); ++e) {
    raw[e] = e;
  }
  auto const ideal = ideal_below(M, G, tm.j_class, use_b);
  element_index first = kNoElement;
  for (element_index e = 0; e < M.size(); ++e) {
    if (ideal[e]) {
      if (first == kNoElement) {
        first = e;
      }
      raw[e] = first;
    }
  }
  std::unordered_map<uint64_t, element_index> reps;
  for (size_t pos = 0; pos < tm.members.size(); ++pos) {
    element_index e = tm.members[pos];
    uint64_t key = (static_cast<uint64_t>(G.h_of[e]) << 32)
                   | coset_class_of(rho, tm.tilde[pos]);
    raw[e] = reps.emplace(key, e).first->second;
  }
  return Congruence::from_block_of(raw);
}

}  // namespace

Congruence build_pi(MonoidSet const& M, GreenStructure const& G,
                    TildeMap const& tm, GroupCongruence const& rho) {
  return build_block_congruence(M, G, tm, rho, /* use_b = */ true);
}

Congruence build_theta(MonoidSet const& M, GreenStructure const& G,
                       TildeMap const& tm, GroupCongruence const& rho) {
  return build_block_congruence(M, G, tm, rho, /* use_b = */ false);
}

Congruence build_theta_union(MonoidSet const& M, GreenStructure const& G,
                             TildeMap const& tm_odd,
                             GroupCongruence const& rho_odd,
                             TildeMap const& tm_even,
                             GroupCongruence const& rho_even) {
  auto const a_odd = ideal_below(M, G, tm_odd.j_class, false);
  auto const a_even = ideal_below(M, G, tm_even.j_class, false);
  if (a_odd != a_even) {
    throw std::invalid_argument("theta union requires equal A-ideals");
  }
  std::vector<uint32_t> raw(M.size());
  for (element_index e = 0; e < M.size(); ++e) {
    raw[e] = e;
  }
  element_index first = kNoElement;
  for (element_index e = 0; e < M.size(); ++e) {
    if (a_odd[e]) {
      if (first == kNoElement) {
        first = e;
      }
      raw[e] = first;
    }
  }
  auto refine_side = [&](TildeMap const& tm, GroupCongruence const& rho) {
    std::unordered_map<uint64_t, element_index> reps;
    for (size_t pos = 0; pos < tm.members.size(); ++pos) {
      element_index e = tm.members[pos];
      uint64_t key = (static_cast<uint64_t>(G.h_of[e]) << 32)
                     | coset_class_of(rho, tm.tilde[pos]);
      raw[e] = reps.emplace(key, e).first->second;
    }
  };
  refine_side(tm_odd, rho_odd);
  refine_side(tm_even, rho_even);
  return Congruence::from_block_of(raw);
}

std::vector<LabeledCongruence> enumerate_congruences_constructive(
    MonoidSet const& M, GreenStructure const& G) {
  if (M.kind() && *M.kind() != MonoidKind::AOPn
      && *M.kind() != MonoidKind::AORn) {
    throw std::invalid_argument(
        "the constructive classification covers aop and aor only");
  }
  int const n = M.degree();
  std::vector<std::vector<uint32_t>> at_rank(n + 1);
  for (uint32_t j = 0; j < G.j_info.size(); ++j) {
    at_rank[G.j_info[j].rank].push_back(j);
  }
  bool const split = at_rank[n - 1].size() == 2;

  std::vector<std::pair<Congruence, std::string>> found;
  found.emplace_back(Congruence::universal_congruence(M.size()), "universal");

  for (int k = 1; k <= n; ++k) {
    if (split && k == n - 1) {
      uint32_t jo = at_rank[k][0], je = at_rank[k][1];
      if (G.j_info[jo].tag != GapTag::odd) {
        std::swap(jo, je);
      }
      TildeMap const tmo = tilde_map(M, G, jo);
      TildeMap const tme = tilde_map(M, G, je);
      auto const rhos_o = group_congruences(M, tmo.anchor_h_class);
      auto const rhos_e = group_congruences(M, tme.anchor_h_class);
      std::string const jo_name = "J" + std::to_string(k) + "o";
      std::string const je_name = "J" + std::to_string(k) + "e";
      for (auto const& rho : rhos_o) {
        found.emplace_back(build_pi(M, G, tmo, rho),
                           "pi(" + jo_name + "," + rho.label + ")");
      }
      for (auto const& rho : rhos_e) {
        found.emplace_back(build_pi(M, G, tme, rho),
                           "pi(" + je_name + "," + rho.label + ")");
      }
      for (auto const& r1 : rhos_o) {
        for (auto const& r2 : rhos_e) {
          found.emplace_back(build_theta_union(M, G, tmo, r1, tme, r2),
                             "theta(" + jo_name + "," + r1.label + ")+theta("
                                 + je_name + "," + r2.label + ")");
        }
      }
    } else {
      if (at_rank[k].size() != 1) {
        throw std::logic_error("unexpected J-class layout at rank "
                               + std::to_string(k));
      }
      uint32_t const j = at_rank[k][0];
      TildeMap const tm = tilde_map(M, G, j);
      auto const rhos = group_congruences(M, tm.anchor_h_class);
      for (auto const& rho : rhos) {
        found.emplace_back(build_pi(M, G, tm, rho),
                           "pi(J" + std::to_string(k) + "," + rho.label + ")");
      }
    }
  }

  // deduplicate as partitions, keeping the first label
  std::unordered_map<Congruence, std::string> dedup;
  for (auto& [cong, label] : found) {
    dedup.emplace(std::move(cong), std::move(label));
  }
  std::vector<LabeledCongruence> out;
  out.reserve(dedup.size());
  for (auto& [cong, label] : dedup) {
    out.push_back(LabeledCongruence{cong, label});
  }
  std::sort(out.begin(), out.end(),
            [](LabeledCongruence const& a, LabeledCongruence const& b) {
              return a.congruence < b.congruence;
            });
  for (auto& lc : out) {
    if (lc.congruence.block_count() == M.size()) {
      lc.label = "identity";
    }
  }
  return out;
}

std::vector<LabeledCongruence> enumerate_congruences_constructive(
    MonoidSet const& M) {
  GreenStructure const G = green_classes(M);
  return enumerate_congruences_constructive(M, G);
}

std::vector<Congruence> congruence_lattice_oracle(MonoidSet const& M,
                                                  bool unsafe_cap) {
  if (M.size() > kCongruenceOracleCap && !unsafe_cap) {
    throw ResourceError("congruence oracle is capped at "
                        + std::to_string(kCongruenceOracleCap)
                        + " elements (use the unsafe-cap override to force)");
  }
  PairCloser closer(M);
  std::unordered_set<Congruence> principal;
  for (element_index a = 0; a < M.size(); ++a) {
    for (element_index b = a + 1; b < M.size(); ++b) {
      principal.insert(closer.close(a, b));
    }
  }
  std::vector<Congruence> lattice(principal.begin(), principal.end());
  std::unordered_set<Congruence> seen(principal.begin(), principal.end());
  for (size_t i = 0; i < lattice.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Congruence joined = join(lattice[i], lattice[j]);
      if (seen.insert(joined).second) {
        lattice.push_back(std::move(joined));
      }
    }
  }
  Congruence id = Congruence::identity_congruence(M.size());
  if (seen.insert(id).second) {
    lattice.push_back(std::move(id));
  }
  std::sort(lattice.begin(), lattice.end());
  return lattice;
}

std::string lattice_dot(std::vector<LabeledCongruence> const& lattice) {
  std::ostringstream os;
  os << "digraph conlattice {\n  node [shape=box];\n";
  for (size_t i = 0; i < lattice.size(); ++i) {
    os << "  c" << i << " [label=\"" << lattice[i].label << " / "
       << lattice[i].congruence.block_count() << " blocks\"];\n";
  }
  for (size_t upper = 0; upper < lattice.size(); ++upper) {
    for (size_t lower = 0; lower < lattice.size(); ++lower) {
      if (upper == lower
          || !lattice[lower].congruence.refines(lattice[upper].congruence)
          || lattice[lower].congruence == lattice[upper].congruence) {
        continue;
      }
      bool cover = true;
      for (size_t mid = 0; mid < lattice.size() && cover; ++mid) {
        if (mid == upper || mid == lower) {
          continue;
        }
        if (lattice[lower].congruence.refines(lattice[mid].congruence)
            && lattice[mid].congruence.refines(lattice[upper].congruence)
            && lattice[mid].congruence != lattice[lower].congruence
            && lattice[mid].congruence != lattice[upper].congruence) {
          cover = false;
        }
      }
      if (cover) {
        os << "  c" << upper << " -> c" << lower << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace aoperm
