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

#include "aoperm/gens.hpp"

#include <algorithm>
#include <deque>

#include "aoperm/green.hpp"

namespace aoperm {

namespace {

uint32_t full_mask(int n) {
  return n == 32 ? 0xffffffffu : ((1u << n) - 1);
}

uint64_t subset_count(uint64_t n, int r) {
  uint64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    out = out * (n - i + 1) / i;
  }
  return out;
}

}  // namespace

std::string to_string(GenSpec const& spec) {
  switch (spec.name) {
    case GenName::g: return "g";
    case GenName::g2: return "g2";
    case GenName::g1: return "g1";
    case GenName::gn: return "gn";
    case GenName::gn2: return "gn2";
    case GenName::h: return "h";
    case GenName::hg: return "hg";
    case GenName::hn: return "hn";
    case GenName::hngn: return "hngn";
    case GenName::x: return "x" + std::to_string(spec.index);
  }
  return "?";
}

std::optional<GenSpec> genspec_from_string(std::string_view s) {
  if (s == "g") return GenSpec{GenName::g};
  if (s == "g2") return GenSpec{GenName::g2};
  if (s == "g1") return GenSpec{GenName::g1};
  if (s == "gn") return GenSpec{GenName::gn};
  if (s == "gn2") return GenSpec{GenName::gn2};
  if (s == "h") return GenSpec{GenName::h};
  if (s == "hg") return GenSpec{GenName::hg};
  if (s == "hn") return GenSpec{GenName::hn};
  if (s == "hngn") return GenSpec{GenName::hngn};
  if (s.size() >= 2 && s[0] == 'x') {
    int idx = 0;
    for (char c : s.substr(1)) {
      if (c < '0' || c > '9') {
        return std::nullopt;
      }
      idx = idx * 10 + (c - '0');
    }
    return GenSpec{GenName::x, idx};
  }
  return std::nullopt;
}

PartialPerm realize(GenSpec spec, int n) {
  check_chain_degree(n);
  std::vector<std::pair<int, int>> pairs;
  switch (spec.name) {
    case GenName::g:
      for (int x = 1; x <= n; ++x) {
        pairs.emplace_back(x, x % n + 1);
      }
      return PartialPerm(n, pairs);
    case GenName::g2:
      return pow(realize({GenName::g}, n), 2);
    case GenName::g1:
      for (int x = 2; x <= n; ++x) {
        pairs.emplace_back(x, x == n ? 2 : x + 1);
      }
      return PartialPerm(n, pairs);
    case GenName::gn:
      for (int x = 1; x <= n - 1; ++x) {
        pairs.emplace_back(x, x % (n - 1) + 1);
      }
      return PartialPerm(n, pairs);
    case GenName::gn2:
      return pow(realize({GenName::gn}, n), 2);
    case GenName::h:
      for (int x = 1; x <= n; ++x) {
        pairs.emplace_back(x, n + 1 - x);
      }
      return PartialPerm(n, pairs);
    case GenName::hg:
      return realize({GenName::h}, n) * realize({GenName::g}, n);
    case GenName::hn:
      for (int x = 1; x <= n - 1; ++x) {
        pairs.emplace_back(x, n - x);
      }
      return PartialPerm(n, pairs);
    case GenName::hngn:
      return realize({GenName::hn}, n) * realize({GenName::gn}, n);
    case GenName::x: {
      int const i = spec.index;
      if (i < 1 || i > n) {
        throw std::invalid_argument("x-generator index out of range");
      }
      int partner;
      if (i >= 3) {
        partner = i - 2;
      } else if (i == 1) {
        partner = n % 2 == 1 ? n : n - 1;
      } else {
        partner = n % 2 == 1 ? n - 1 : n;
      }
      uint32_t const dom = full_mask(n) & ~(1u << (i - 1));
      uint32_t const img = full_mask(n) & ~(1u << (partner - 1));
      return PartialPerm::order_iso(n, dom, img);
    }
  }
  throw std::invalid_argument("unknown generator name");
}

std::vector<GenSpec> minimum_generating_set(MonoidKind kind, int n) {
  check_chain_degree(n);
  switch (kind) {
    case MonoidKind::AOPn:
      if (n % 2 == 1) {
        return {{GenName::g}, {GenName::gn2}};
      }
      return {{GenName::g2}, {GenName::g1}, {GenName::gn}};
    case MonoidKind::AORn:
      if (n < 4) {
        throw std::invalid_argument(
            "the aor generating sets are stated for degree >= 4");
      }
      switch (n % 4) {
        case 0: return {{GenName::g2}, {GenName::h}, {GenName::gn}};
        case 1: return {{GenName::g}, {GenName::h}, {GenName::gn2}};
        case 2:
          return {{GenName::g2}, {GenName::hg}, {GenName::g1}, {GenName::gn}};
        default: return {{GenName::g}, {GenName::gn2}, {GenName::hngn}};
      }
    case MonoidKind::AOn: {
      std::vector<GenSpec> out;
      for (int i = 1; i <= n; ++i) {
        out.push_back({GenName::x, i});
      }
      return out;
    }
    default:
      throw std::invalid_argument(
          std::string("no minimum generating set on record for ")
          + to_string(kind));
  }
}

GenerationResult verify_generating(MonoidKind kind, int n,
                                   std::vector<GenSpec> const& specs) {
  std::vector<PartialPerm> gens;
  gens.reserve(specs.size());
  for (auto const& spec : specs) {
    gens.push_back(realize(spec, n));
  }
  MonoidSet const C = closure(n, gens);
  MonoidSet const M = enumerate(kind, n);
  if (C.size() != M.size()) {
    return {false, C.size()};
  }
  for (auto const& a : C.elements()) {
    if (!M.contains(a)) {
      return {false, C.size()};
    }
  }
  return {true, C.size()};
}

RankBound rank_lower_bound(MonoidKind kind, int n) {
  if (kind != MonoidKind::AOPn && kind != MonoidKind::AORn) {
    throw std::invalid_argument("rank bounds cover aop and aor only");
  }
  MonoidSet const M = enumerate(kind, n);
  GreenStructure const G = green_classes(M);

  uint32_t const top = G.j_of[M.identity_index()];
  auto const& units = G.j_members[top];

  // minimum generating count of the unit group, by brute force over subsets
  auto generates_units = [&](std::vector<element_index> const& seed) {
    std::vector<element_index> set{M.identity_index()};
    for (element_index e : seed) {
      set.push_back(e);
    }
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
    return set.size() == units.size();
  };

  int unit_rank = -1;
  if (units.size() == 1) {
    unit_rank = 0;
  } else {
    for (int s = 1; s <= static_cast<int>(units.size()) && unit_rank < 0; ++s) {
      std::vector<int> pick(s);
      for (int i = 0; i < s; ++i) {
        pick[i] = i;
      }
      while (true) {
        std::vector<element_index> seed;
        for (int i : pick) {
          seed.push_back(units[i]);
        }
        if (generates_units(seed)) {
          unit_rank = s;
          break;
        }
        int i = s - 1;
        while (i >= 0 && pick[i] == static_cast<int>(units.size()) - s + i) {
          --i;
        }
        if (i < 0) {
          break;
        }
        ++pick[i];
        for (int j = i + 1; j < s; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
    }
  }

  int maximal = 0;
  for (uint32_t c = 0; c < G.j_info.size(); ++c) {
    if (c == top) {
      continue;
    }
    bool is_maximal = true;
    for (uint32_t d = 0; d < G.j_info.size() && is_maximal; ++d) {
      if (d != c && d != top && G.j_leq[c][d]) {
        is_maximal = false;
      }
    }
    if (is_maximal) {
      ++maximal;
    }
  }
  return {unit_rank, maximal, unit_rank + maximal};
}

bool exhaustive_rank_check(MonoidKind kind, int n, int r,
                           std::optional<GenSpec> anchor) {
  MonoidSet const M = enumerate(kind, n);
  size_t const N = M.size();
  int const sweep_arity = anchor ? r - 1 : r;
  if (sweep_arity < 1 || sweep_arity > 2) {
    throw ResourceError("subset sweeps support r in {1, 2} (or {2, 3} anchored)");
  }
  if (subset_count(N, sweep_arity) > 20'000'000ull) {
    throw ResourceError("subset sweep exceeds the combinatorial budget");
  }

  element_index const id = M.identity_index();
  std::vector<char> is_unit(N, 0), is_op(N, 0), is_rank_top_minus_one(N, 0);
  size_t nontrivial_units = 0;
  for (element_index e = 0; e < N; ++e) {
    auto const& a = M.at(e);
    is_unit[e] = a.rank() == n;
    nontrivial_units += is_unit[e] && e != id;
    is_op[e] = orient_flags(a).orientation_preserving;
    is_rank_top_minus_one[e] = a.rank() == n - 1;
  }

  std::vector<char> visited(N, 0);
  std::vector<element_index> queue;
  auto closure_reaches_all = [&](std::vector<element_index> const& subset) {
    std::fill(visited.begin(), visited.end(), 0);
    queue.clear();
    visited[id] = 1;
    queue.push_back(id);
    size_t count = 1, head = 0;
    while (head < queue.size()) {
      element_index x = queue[head++];
      for (element_index g : subset) {
        element_index y = M.mul(x, g);
        if (!visited[y]) {
          visited[y] = 1;
          ++count;
          queue.push_back(y);
        }
      }
    }
    return count == N;
  };

  auto generates = [&](std::vector<element_index> const& subset) {
    // cheap rejections, each backed by a submonoid containment:
    // products of non-units never regain full rank, so a subset without a
    // non-identity unit misses the units;
    bool has_unit = false, has_corank_one = false, all_op = true;
    for (element_index e : subset) {
      has_unit |= is_unit[e] && e != id;
      has_corank_one |= is_rank_top_minus_one[e];
      all_op &= static_cast<bool>(is_op[e]);
    }
    if (nontrivial_units > 0 && !has_unit) {
      return false;
    }
    // a word with a non-unit letter has rank at most the letter's rank, so
    // rank n-1 elements need a rank n-1 generator
    if (!has_corank_one) {
      return false;
    }
    // the orientation-preserving elements form a proper submonoid of AORn
    // for n >= 4
    if (kind == MonoidKind::AORn && n >= 4 && all_op) {
      return false;
    }
    return closure_reaches_all(subset);
  };

  std::vector<element_index> fixed;
  if (anchor) {
    fixed.push_back(M.index_of(realize(*anchor, n)));
  }
  if (sweep_arity == 1) {
    for (element_index a = 0; a < N; ++a) {
      std::vector<element_index> subset = fixed;
      if (!fixed.empty() && fixed[0] == a) {
        continue;
      }
      subset.push_back(a);
      if (generates(subset)) {
        return false;
      }
    }
    return true;
  }
  for (element_index a = 0; a < N; ++a) {
    for (element_index b = a + 1; b < N; ++b) {
      std::vector<element_index> subset = fixed;
      subset.push_back(a);
      subset.push_back(b);
      if (generates(subset)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace aoperm
