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

#include "aoperm/engine.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "aoperm/green.hpp"

namespace aoperm {

namespace {

uint32_t full_mask(int n) {
  return n == 32 ? 0xffffffffu : ((1u << n) - 1);
}

}  // namespace

element_index MonoidSet::index_of(PartialPerm const& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) {
    throw std::invalid_argument("element " + format_pperm(a)
                                + " is not in the monoid");
  }
  return it->second;
}

void MonoidSet::finish_index() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (element_index i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], i);
  }
  identity_ = find(PartialPerm::identity(n_));
}

std::vector<element_index> const& MonoidSet::generator_ids() const {
  if (!gens_.empty() || elements_.empty()) {
    return gens_;
  }
  // Greedy sweep in descending canonical order (units first). Each time an
  // element outside the current closure is adopted, the closure is rebuilt
  // by right-multiplication BFS from the identity.
  std::vector<char> closed(size(), 0);
  closed[identity_] = 1;
  auto reclose = [&]() {
    std::fill(closed.begin(), closed.end(), 0);
    closed[identity_] = 1;
    std::deque<element_index> queue{identity_};
    while (!queue.empty()) {
      element_index x = queue.front();
      queue.pop_front();
      for (element_index g : gens_) {
        element_index y = mul(x, g);
        if (!closed[y]) {
          closed[y] = 1;
          queue.push_back(y);
        }
      }
    }
  };
  for (element_index i = size(); i-- > 0;) {
    if (!closed[i]) {
      gens_.push_back(i);
      reclose();
    }
  }
  return gens_;
}

MonoidSet closure(int n, std::vector<PartialPerm> const& generators) {
  check_chain_degree(n);
  for (auto const& g : generators) {
    if (g.degree() != n) {
      throw std::invalid_argument("generator degree mismatch");
    }
  }
  MonoidSet M;
  M.n_ = n;

  std::unordered_map<PartialPerm, element_index>& index = M.index_;
  std::vector<PartialPerm>& elements = M.elements_;

  auto push_new = [&](PartialPerm const& a) -> bool {
    if (index.count(a)) {
      return false;
    }
    index.emplace(a, static_cast<element_index>(elements.size()));
    elements.push_back(a);
    return true;
  };

  // layer 0: the identity; layer 1: the distinct non-identity generators
  push_new(PartialPerm::identity(n));
  std::vector<PartialPerm> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<PartialPerm> frontier;
  for (auto const& g : gens) {
    if (push_new(g)) {
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<PartialPerm> next;
    for (auto const& f : frontier) {
      for (auto const& g : gens) {
        PartialPerm p = f * g;
        if (!index.count(p)) {
          next.push_back(p);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto const& p : next) {
      push_new(p);
    }
    frontier = std::move(next);
  }
  M.identity_ = 0;
  for (auto const& g : gens) {
    M.gens_.push_back(M.index_of(g));
  }
  return M;
}

MonoidSet enumerate(MonoidKind kind, int n, bool unsafe_cap) {
  check_chain_degree(n);
  if (n > kEnumerationDegreeCap && !unsafe_cap) {
    throw ResourceError("full enumeration is capped at degree "
                        + std::to_string(kEnumerationDegreeCap)
                        + " (use the unsafe-cap override to force)");
  }
  MonoidSet M;
  M.n_ = n;
  M.kind_ = kind;

  std::vector<uint32_t> masks_by_rank[kMaxDegree + 1];
  for (uint32_t m = 0; m <= full_mask(n); ++m) {
    masks_by_rank[__builtin_popcount(m)].push_back(m);
    if (m == full_mask(n)) {
      break;
    }
  }
  for (int k = 0; k <= n; ++k) {
    for (uint32_t dmask : masks_by_rank[k]) {
      for (uint32_t imask : masks_by_rank[k]) {
        std::vector<int> img;
        for (uint32_t m = imask; m != 0; m &= m - 1) {
          img.push_back(__builtin_ctz(m) + 1);
        }
        std::vector<int> dom;
        for (uint32_t m = dmask; m != 0; m &= m - 1) {
          dom.push_back(__builtin_ctz(m) + 1);
        }
        do {
          std::vector<std::pair<int, int>> pairs;
          pairs.reserve(k);
          for (int i = 0; i < k; ++i) {
            pairs.emplace_back(dom[i], img[i]);
          }
          PartialPerm cand(n, pairs);
          if (member_oracle(cand, kind)) {
            M.elements_.push_back(cand);
          }
        } while (std::next_permutation(img.begin(), img.end()));
      }
    }
  }
  std::sort(M.elements_.begin(), M.elements_.end());
  M.finish_index();
  return M;
}

mpz_class cardinality_formula(MonoidKind kind, int n) {
  check_chain_degree(n);
  auto binom = [](unsigned a, unsigned b) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), a, b);
    return out;
  };
  auto factorial = [](unsigned a) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), a);
    return out;
  };
  mpz_class const central = binom(2 * n, n);
  mpz_class const nz = n;

  switch (kind) {
    case MonoidKind::In: {
      mpz_class sum = 0;
      for (int k = 0; k <= n; ++k) {
        sum += binom(n, k) * binom(n, k) * factorial(k);
      }
      return sum;
    }
    case MonoidKind::AIn: {
      mpz_class sum = factorial(n) / 2 + factorial(n) * n / 2;
      for (int k = 0; k <= n - 2; ++k) {
        sum += binom(n, k) * binom(n, k) * factorial(k);
      }
      return sum;
    }
    case MonoidKind::POPIn:
      return 1 + nz * central / 2;
    case MonoidKind::PORIn:
      return 1 + nz * central - nz * nz * (nz * nz - 2 * nz + 3) / 2;
    case MonoidKind::AOPn: {
      mpz_class out = nz * central / 2 - nz * nz * (nz - 1) / 2 + 1;
      if (n % 2 == 0) {
        out -= nz / 2;
      }
      return out;
    }
    case MonoidKind::AORn: {
      if (n == 3) {
        // degree 3 is degenerate: every oriented member is already
        // orientation-preserving
        return cardinality_formula(MonoidKind::AOPn, 3);
      }
      mpz_class out = 1 + nz * central - nz * nz * (nz * nz + 1) / 2;
      if (n % 4 != 1) {
        out -= nz;
      }
      return out;
    }
    default:
      throw std::invalid_argument(std::string("no closed cardinality form for ")
                                  + to_string(kind));
  }
}

std::vector<Ideal> ideals(MonoidSet const& M) {
  GreenStructure const G = green_classes(M);
  size_t const c = G.j_info.size();
  if (c > 24) {
    throw ResourceError("too many J-classes for ideal enumeration");
  }
  std::vector<Ideal> out;
  for (uint32_t mask = 1; mask < (1u << c); ++mask) {
    bool down_closed = true;
    for (size_t j = 0; j < c && down_closed; ++j) {
      if (!((mask >> j) & 1u)) {
        continue;
      }
      for (size_t i = 0; i < c; ++i) {
        if (G.j_leq[i][j] && !((mask >> i) & 1u)) {
          down_closed = false;
          break;
        }
      }
    }
    if (!down_closed) {
      continue;
    }
    Ideal ideal;
    ideal.member.assign(M.size(), 0);
    int max_rank = 0;
    for (element_index e = 0; e < M.size(); ++e) {
      if ((mask >> G.j_of[e]) & 1u) {
        ideal.member[e] = 1;
        ++ideal.size;
        max_rank = std::max(max_rank, M.at(e).rank());
      }
    }
    // label: I<k> when the whole rank-k level is present, else the o/e side
    bool whole_level = true;
    GapTag tag = GapTag::none;
    for (size_t j = 0; j < c; ++j) {
      if (G.j_info[j].rank == max_rank) {
        if ((mask >> j) & 1u) {
          tag = G.j_info[j].tag;
        } else {
          whole_level = false;
        }
      }
    }
    ideal.label = "I" + std::to_string(max_rank);
    if (!whole_level) {
      ideal.label += tag == GapTag::odd ? "o" : "e";
    }
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](Ideal const& a, Ideal const& b) {
    return a.size != b.size ? a.size < b.size : a.label < b.label;
  });
  return out;
}

std::pair<int, PartialPerm> factor_gib(PartialPerm const& a) {
  if (!orient_flags(a).orientation_preserving) {
    throw std::invalid_argument("factor_gib requires an orientation-preserving map");
  }
  int const n = a.degree();
  std::vector<int> images(n);
  for (int x = 1; x <= n; ++x) {
    images[x - 1] = x % n + 1;
  }
  PartialPerm const g = Permutation(n, images).to_partial();
  PartialPerm rot = PartialPerm::identity(n);  // g^{n-i} as i grows from 0
  for (int i = 0; i < n; ++i) {
    PartialPerm b = rot * a;
    if (orient_flags(b).order_preserving) {
      return {i, b};
    }
    rot = g.inverse() * rot;
  }
  throw std::logic_error("no rotation factors the map through an order-preserving one");
}

std::string pperm_json(PartialPerm const& a) {
  nlohmann::json j;
  j["n"] = a.degree();
  j["dom"] = a.dom();
  j["img"] = a.img_seq();
  return j.dump();
}

void write_elements_jsonl(MonoidSet const& M, std::ostream& os) {
  nlohmann::json header;
  header["kind"] = M.kind() ? to_string(*M.kind()) : "custom";
  header["n"] = M.degree();
  header["count"] = M.size();
  os << header.dump() << '\n';
  for (auto const& a : M.elements()) {
    os << pperm_json(a) << '\n';
  }
}

}  // namespace aoperm
