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

#include "aoperm/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace aoperm {

namespace {

// Iterative Tarjan SCC over the graph with edges x -> g*x and x -> x*g for
// the generators g. Mutual reachability is exactly the J-relation, since the
// reachable set of x is M x M.
std::vector<uint32_t> j_sccs(MonoidSet const& M, size_t& scc_count) {
  size_t const N = M.size();
  auto const& gens = M.generator_ids();
  size_t const out_deg = 2 * gens.size();

  auto neighbor = [&](element_index x, size_t e) -> element_index {
    size_t const gi = e / 2;
    return e % 2 == 0 ? M.mul(gens[gi], x) : M.mul(x, gens[gi]);
  };

  std::vector<uint32_t> comp(N, UINT32_MAX), low(N), num(N, UINT32_MAX);
  std::vector<element_index> stack;
  std::vector<char> on_stack(N, 0);
  std::vector<std::pair<element_index, size_t>> call;  // (node, next edge)
  uint32_t timer = 0;
  scc_count = 0;

  for (element_index root = 0; root < N; ++root) {
    if (num[root] != UINT32_MAX) {
      continue;
    }
    call.emplace_back(root, 0);
    num[root] = low[root] = timer++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [x, e] = call.back();
      if (e < out_deg) {
        element_index y = neighbor(x, e++);
        if (num[y] == UINT32_MAX) {
          num[y] = low[y] = timer++;
          stack.push_back(y);
          on_stack[y] = 1;
          call.emplace_back(y, 0);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], num[y]);
        }
      } else {
        if (low[x] == num[x]) {
          while (true) {
            element_index y = stack.back();
            stack.pop_back();
            on_stack[y] = 0;
            comp[y] = static_cast<uint32_t>(scc_count);
            if (y == x) {
              break;
            }
          }
          ++scc_count;
        }
        element_index finished = x;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().first]
              = std::min(low[call.back().first], low[finished]);
        }
      }
    }
  }
  return comp;
}

}  // namespace

std::string to_string(GroupType const& g) {
  switch (g.tag) {
    case GroupType::Tag::trivial: return "trivial";
    case GroupType::Tag::cyclic: return "cyclic(" + std::to_string(g.order) + ")";
    case GroupType::Tag::dihedral:
      return "dihedral(" + std::to_string(g.order) + ")";
    case GroupType::Tag::klein: return "klein";
  }
  return "?";
}

GroupType h_group_type(MonoidSet const& M,
                       std::vector<element_index> const& h_class) {
  element_index idem = kNoElement;
  for (element_index e : h_class) {
    if (M.at(e).is_partial_identity()) {
      idem = e;
      break;
    }
  }
  if (idem == kNoElement) {
    throw std::invalid_argument("H-class has no idempotent: not a group");
  }
  size_t const m = h_class.size();
  std::vector<element_index> sorted = h_class;
  std::sort(sorted.begin(), sorted.end());
  auto inside = [&](element_index e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
  };
  auto order_of = [&](element_index e) {
    int ord = 1;
    element_index x = e;
    while (x != idem) {
      x = M.mul(x, e);
      ++ord;
    }
    return ord;
  };
  for (element_index a : h_class) {
    for (element_index b : h_class) {
      if (!inside(M.mul(a, b))) {
        throw std::invalid_argument("H-class is not closed under the product");
      }
    }
  }
  if (m == 1) {
    return {GroupType::Tag::trivial, 1};
  }
  for (element_index e : h_class) {
    if (static_cast<size_t>(order_of(e)) == m) {
      return {GroupType::Tag::cyclic, static_cast<int>(m)};
    }
  }
  if (m == 4) {
    return {GroupType::Tag::klein, 4};
  }
  if (m % 2 == 0) {
    size_t const half = m / 2;
    for (element_index s : h_class) {
      if (static_cast<size_t>(order_of(s)) != half) {
        continue;
      }
      std::vector<element_index> cyc;
      element_index x = idem;
      for (size_t i = 0; i < half; ++i) {
        cyc.push_back(x);
        x = M.mul(x, s);
      }
      std::sort(cyc.begin(), cyc.end());
      for (element_index t : h_class) {
        if (std::binary_search(cyc.begin(), cyc.end(), t)) {
          continue;
        }
        if (M.mul(t, t) == idem
            && M.mul(M.mul(t, s), t) == M.inv(s)) {
          return {GroupType::Tag::dihedral, static_cast<int>(m)};
        }
      }
    }
  }
  throw std::runtime_error("unrecognized group H-class of order "
                           + std::to_string(m));
}

GreenStructure green_classes(MonoidSet const& M) {
  GreenStructure G;
  size_t const N = M.size();
  G.l_of.resize(N);
  G.r_of.resize(N);
  G.h_of.resize(N);

  std::map<uint32_t, uint32_t> l_ids, r_ids;
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> h_ids;
  for (element_index e = 0; e < N; ++e) {
    auto const& a = M.at(e);
    G.l_of[e] = l_ids.emplace(a.img_mask(), static_cast<uint32_t>(l_ids.size()))
                    .first->second;
    G.r_of[e] = r_ids.emplace(a.dom_mask(), static_cast<uint32_t>(r_ids.size()))
                    .first->second;
    G.h_of[e] = h_ids.emplace(std::make_pair(a.dom_mask(), a.img_mask()),
                              static_cast<uint32_t>(h_ids.size()))
                    .first->second;
  }
  G.n_l = l_ids.size();
  G.n_r = r_ids.size();
  G.n_h = h_ids.size();
  G.h_members.resize(G.n_h);
  for (element_index e = 0; e < N; ++e) {
    G.h_members[G.h_of[e]].push_back(e);
  }

  // J via SCCs, then relabel classes by (rank, smallest member)
  size_t scc_count = 0;
  std::vector<uint32_t> comp = j_sccs(M, scc_count);
  std::vector<element_index> first_member(scc_count, kNoElement);
  for (element_index e = 0; e < N; ++e) {
    if (first_member[comp[e]] == kNoElement) {
      first_member[comp[e]] = e;  // canonical element order is rank-sorted
    }
  }
  std::vector<uint32_t> order(scc_count);
  for (uint32_t c = 0; c < scc_count; ++c) {
    order[c] = c;
  }
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return first_member[a] < first_member[b];
  });
  std::vector<uint32_t> relabel(scc_count);
  for (uint32_t pos = 0; pos < scc_count; ++pos) {
    relabel[order[pos]] = pos;
  }
  G.n_j = scc_count;
  G.j_of.resize(N);
  G.j_members.resize(scc_count);
  for (element_index e = 0; e < N; ++e) {
    G.j_of[e] = relabel[comp[e]];
    G.j_members[G.j_of[e]].push_back(e);
  }

  // reachability of the condensation: J_a <= J_b iff a in M b M
  auto const& gens = M.generator_ids();
  G.j_leq.assign(scc_count, std::vector<char>(scc_count, 0));
  for (uint32_t c = 0; c < scc_count; ++c) {
    std::vector<char>& below = G.j_leq[c];  // filled as: below[d] reached FROM c
    std::vector<uint32_t> stack{c};
    std::vector<char> seen(scc_count, 0);
    seen[c] = 1;
    while (!stack.empty()) {
      uint32_t d = stack.back();
      stack.pop_back();
      for (element_index e : G.j_members[d]) {
        for (element_index g : gens) {
          for (element_index y : {M.mul(g, e), M.mul(e, g)}) {
            uint32_t jy = G.j_of[y];
            if (!seen[jy]) {
              seen[jy] = 1;
              stack.push_back(jy);
            }
          }
        }
      }
    }
    for (uint32_t d = 0; d < scc_count; ++d) {
      if (seen[d]) {
        below[d] = 1;  // J_d <= J_c
      }
    }
  }
  // transpose into j_leq[a][b] = J_a <= J_b
  {
    std::vector<std::vector<char>> leq(scc_count, std::vector<char>(scc_count, 0));
    for (uint32_t c = 0; c < scc_count; ++c) {
      for (uint32_t d = 0; d < scc_count; ++d) {
        if (G.j_leq[c][d]) {
          leq[d][c] = 1;
        }
      }
    }
    G.j_leq = std::move(leq);
  }

  // covering relations
  for (uint32_t u = 0; u < scc_count; ++u) {
    for (uint32_t l = 0; l < scc_count; ++l) {
      if (l == u || !G.j_leq[l][u]) {
        continue;
      }
      bool cover = true;
      for (uint32_t m = 0; m < scc_count && cover; ++m) {
        if (m != l && m != u && G.j_leq[l][m] && G.j_leq[m][u]) {
          cover = false;
        }
      }
      if (cover) {
        G.hasse.emplace_back(u, l);
      }
    }
  }
  std::sort(G.hasse.begin(), G.hasse.end());

  // per-class statistics
  G.j_info.resize(scc_count);
  for (uint32_t c = 0; c < scc_count; ++c) {
    JClassInfo& info = G.j_info[c];
    auto const& members = G.j_members[c];
    info.size = members.size();
    info.rank = M.at(members.front()).rank();
    std::vector<uint32_t> ls, rs;
    size_t h_max = 0;
    element_index idem_h = kNoElement;
    for (element_index e : members) {
      ls.push_back(G.l_of[e]);
      rs.push_back(G.r_of[e]);
      h_max = std::max(h_max, G.h_members[G.h_of[e]].size());
      if (M.at(e).is_partial_identity()) {
        info.has_idempotent = true;
        if (idem_h == kNoElement) {
          idem_h = G.h_of[e];
        }
      }
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    info.n_l_classes = ls.size();
    info.n_r_classes = rs.size();
    info.h_size = h_max;
    if (idem_h != kNoElement) {
      info.group = h_group_type(M, G.h_members[idem_h]);
    }
  }

  // o/e tags where a rank level splits into several classes
  int const n = M.degree();
  std::map<int, int> classes_at_rank;
  for (auto const& info : G.j_info) {
    classes_at_rank[info.rank]++;
  }
  for (uint32_t c = 0; c < scc_count; ++c) {
    JClassInfo& info = G.j_info[c];
    if (classes_at_rank[info.rank] < 2 || info.rank != n - 1) {
      continue;
    }
    bool all_odd = true, all_even = true;
    for (element_index e : G.j_members[c]) {
      (M.at(e).dom_gap() % 2 == 1 ? all_even : all_odd) = false;
    }
    if (all_odd) {
      info.tag = GapTag::odd;
    } else if (all_even) {
      info.tag = GapTag::even;
    }
  }
  return G;
}

std::string j_poset_dot(GreenStructure const& G) {
  std::ostringstream os;
  os << "digraph jposet {\n  node [shape=box];\n";
  for (uint32_t c = G.j_info.size(); c-- > 0;) {
    auto const& info = G.j_info[c];
    os << "  j" << c << " [label=\"rank " << info.rank;
    if (info.tag == GapTag::odd) {
      os << " (o)";
    } else if (info.tag == GapTag::even) {
      os << " (e)";
    }
    os << "\"];\n";
  }
  for (auto const& [upper, lower] : G.hasse) {
    os << "  j" << upper << " -> j" << lower << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string green_summary_json(GreenStructure const& G) {
  nlohmann::json j;
  j["j_classes"] = nlohmann::json::array();
  for (auto const& info : G.j_info) {
    nlohmann::json jc;
    jc["rank"] = info.rank;
    jc["tag"] = info.tag == GapTag::none ? ""
              : info.tag == GapTag::odd ? "o" : "e";
    jc["size"] = info.size;
    jc["n_L"] = info.n_l_classes;
    jc["n_R"] = info.n_r_classes;
    jc["h_size"] = info.h_size;
    jc["group_type"] = info.group ? to_string(*info.group) : "";
    j["j_classes"].push_back(jc);
  }
  j["hasse_edges"] = nlohmann::json::array();
  for (auto const& [upper, lower] : G.hasse) {
    j["hasse_edges"].push_back({upper, lower});
  }
  return j.dump();
}

}  // namespace aoperm
