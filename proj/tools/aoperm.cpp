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

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "aoperm/congruence.hpp"
#include "aoperm/gens.hpp"
#include "aoperm/selftest.hpp"

namespace {

// exit codes: 0 all asserted properties hold, 1 a mathematical assertion
// failed, 2 usage error, 3 resource cap exceeded
constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

aoperm::MonoidKind parse_kind(std::string const& s) {
  auto kind = aoperm::kind_from_string(s);
  if (!kind) {
    throw CLI::ValidationError("--kind",
                               "unknown monoid kind '" + s
                                   + "' (expected in|ai|poi|ao|popi|pori|aop|aor)");
  }
  return *kind;
}

int run_card(std::string const& kind_name, int n, bool unsafe_cap) {
  aoperm::MonoidKind const kind = parse_kind(kind_name);
  mpz_class const formula = aoperm::cardinality_formula(kind, n);
  if (n > aoperm::kEnumerationDegreeCap && !unsafe_cap) {
    std::cout << "formula=" << formula.get_str()
              << " enumerated=skipped(n>" << aoperm::kEnumerationDegreeCap
              << ")\n";
    return kOk;
  }
  size_t const enumerated = aoperm::enumerate(kind, n, unsafe_cap).size();
  bool const match = formula == mpz_class(enumerated);
  std::cout << "formula=" << formula.get_str() << " enumerated=" << enumerated
            << (match ? " MATCH" : " MISMATCH") << "\n";
  return match ? kOk : kMathFailure;
}

int run_enum(std::string const& kind_name, int n, std::string const& out_path,
             bool unsafe_cap) {
  aoperm::MonoidSet const M
      = aoperm::enumerate(parse_kind(kind_name), n, unsafe_cap);
  if (out_path.empty()) {
    aoperm::write_elements_jsonl(M, std::cout);
  } else {
    std::ofstream os(out_path);
    if (!os) {
      throw CLI::ValidationError("--out", "cannot open " + out_path);
    }
    aoperm::write_elements_jsonl(M, os);
  }
  return kOk;
}

int run_member(std::string const& kind_name, int n, std::string const& elt) {
  aoperm::MonoidKind const kind = parse_kind(kind_name);
  aoperm::PartialPerm const a = aoperm::parse_pperm(n, elt);
  bool const oracle = aoperm::member_oracle(a, kind);
  if (kind != aoperm::MonoidKind::AOPn && kind != aoperm::MonoidKind::AORn) {
    std::cout << "oracle=" << (oracle ? "true" : "false") << "\n";
    return kOk;
  }
  bool const fast = aoperm::member_fast(a, kind);
  std::cout << "fast=" << (fast ? "true" : "false")
            << " oracle=" << (oracle ? "true" : "false")
            << (fast == oracle ? " AGREE" : " DISAGREE") << "\n";
  return fast == oracle ? kOk : kMathFailure;
}

int run_green(std::string const& kind_name, int n, std::string const& dot_path,
              bool json, bool unsafe_cap) {
  aoperm::MonoidSet const M
      = aoperm::enumerate(parse_kind(kind_name), n, unsafe_cap);
  aoperm::GreenStructure const G = aoperm::green_classes(M);
  if (json) {
    std::cout << aoperm::green_summary_json(G) << "\n";
  } else {
    for (uint32_t j = G.j_info.size(); j-- > 0;) {
      auto const& info = G.j_info[j];
      std::cout << "rank=" << info.rank << " tag="
                << (info.tag == aoperm::GapTag::odd    ? "o"
                    : info.tag == aoperm::GapTag::even ? "e"
                                                       : "-")
                << " size=" << info.size << " L=" << info.n_l_classes
                << " R=" << info.n_r_classes << " H=" << info.h_size
                << " group="
                << (info.group ? to_string(*info.group) : std::string("-"))
                << "\n";
    }
    std::cout << "j-classes=" << G.j_info.size()
              << " hasse-edges=" << G.hasse.size() << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream os(dot_path);
    if (!os) {
      throw CLI::ValidationError("--dot", "cannot open " + dot_path);
    }
    os << aoperm::j_poset_dot(G);
  }
  return kOk;
}

int run_congruences(std::string const& kind_name, int n, bool list,
                    std::string const& dot_path, bool unsafe_cap) {
  aoperm::MonoidKind const kind = parse_kind(kind_name);
  aoperm::MonoidSet const M = aoperm::enumerate(kind, n, unsafe_cap);
  if (kind != aoperm::MonoidKind::AOPn && kind != aoperm::MonoidKind::AORn) {
    auto const lattice = aoperm::congruence_lattice_oracle(M, unsafe_cap);
    std::cout << "oracle=" << lattice.size() << "\n";
    if (list) {
      for (auto const& c : lattice) {
        std::cout << c.block_count() << " blocks\n";
      }
    }
    return kOk;
  }
  auto const constructive = aoperm::enumerate_congruences_constructive(M);
  auto const oracle = aoperm::congruence_lattice_oracle(M, unsafe_cap);
  std::set<aoperm::Congruence> cs, os(oracle.begin(), oracle.end());
  for (auto const& lc : constructive) {
    cs.insert(lc.congruence);
  }
  bool const match = cs == os;
  std::cout << "constructive=" << constructive.size()
            << " oracle=" << oracle.size() << (match ? " MATCH" : " MISMATCH")
            << "\n";
  if (list) {
    for (auto const& lc : constructive) {
      std::cout << lc.label << " / " << lc.congruence.block_count()
                << " blocks\n";
    }
  }
  if (!dot_path.empty()) {
    std::ofstream osf(dot_path);
    if (!osf) {
      throw CLI::ValidationError("--lattice-dot", "cannot open " + dot_path);
    }
    osf << aoperm::lattice_dot(constructive);
  }
  return match ? kOk : kMathFailure;
}

int run_rank(std::string const& kind_name, int n, bool verify_min_set,
             int exhaustive_r, std::string const& anchor_name) {
  aoperm::MonoidKind const kind = parse_kind(kind_name);
  if (verify_min_set) {
    auto const specs = aoperm::minimum_generating_set(kind, n);
    auto const result = aoperm::verify_generating(kind, n, specs);
    std::cout << "set={";
    for (size_t i = 0; i < specs.size(); ++i) {
      std::cout << (i ? "," : "") << aoperm::to_string(specs[i]);
    }
    std::cout << "} generates=" << (result.generates ? "true" : "false")
              << " closure=" << result.closure_size << "\n";
    return result.generates ? kOk : kMathFailure;
  }
  if (exhaustive_r > 0) {
    std::optional<aoperm::GenSpec> anchor;
    if (!anchor_name.empty()) {
      anchor = aoperm::genspec_from_string(anchor_name);
      if (!anchor) {
        throw CLI::ValidationError("--anchor",
                                   "unknown generator '" + anchor_name + "'");
      }
    }
    bool const none_generate
        = aoperm::exhaustive_rank_check(kind, n, exhaustive_r, anchor);
    std::cout << "no-" << exhaustive_r << "-subset-generates="
              << (none_generate ? "true" : "false") << "\n";
    return kOk;
  }
  auto const bound = aoperm::rank_lower_bound(kind, n);
  std::cout << "lower-bound=" << bound.bound
            << " (units=" << bound.unit_group_rank
            << " maximal-classes=" << bound.maximal_nonunit_j_classes << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in the alternating oriented partial permutation "
               "monoids on a finite chain"};
  app.require_subcommand(1);

  std::string kind_name, elt, out_path, dot_path, anchor_name;
  int n = 0;
  bool unsafe_cap = false, json = false, list = false, count_only = false;
  bool verify_min_set = false;
  int exhaustive_r = 0;
  uint64_t seed = 12345;  // reserved for sampled runs

  auto add_common = [&](CLI::App* cmd, bool needs_kind = true) {
    if (needs_kind) {
      cmd->add_option("--kind", kind_name, "monoid kind")->required();
      cmd->add_option("--n", n, "chain degree")->required();
    }
    cmd->add_flag("--unsafe-cap", unsafe_cap,
                  "override the enumeration/oracle size caps");
  };

  auto* card = app.add_subcommand("card", "cardinality: formula vs enumeration");
  add_common(card);

  auto* enum_cmd = app.add_subcommand("enum", "stream all elements as JSON lines");
  add_common(enum_cmd);
  enum_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* member = app.add_subcommand("member", "membership of one element");
  add_common(member);
  member->add_option("--elt", elt, "element literal, e.g. \"1->2,3->1\"")
      ->required();

  auto* green = app.add_subcommand("green", "Green's classes and the J-poset");
  add_common(green);
  green->add_option("--dot", dot_path, "write the J-poset as DOT");
  green->add_flag("--json", json, "JSON summary instead of the table");

  auto* congruences
      = app.add_subcommand("congruences", "the congruence lattice");
  add_common(congruences);
  congruences->add_flag("--count", count_only, "print counts only (default)");
  congruences->add_flag("--list", list, "also list the congruences");
  congruences->add_option("--lattice-dot", dot_path,
                          "write the lattice as DOT");

  auto* rank = app.add_subcommand("rank", "generating sets and rank bounds");
  add_common(rank);
  rank->add_flag("--verify-min-set", verify_min_set,
                 "close the known minimum generating set and compare");
  rank->add_option("--exhaustive", exhaustive_r,
                   "sweep all R-element subsets");
  rank->add_option("--anchor", anchor_name,
                   "fix one generator by name during the sweep");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  add_common(selftest, false);
  selftest->add_option("--seed", seed, "seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (card->parsed()) {
      return run_card(kind_name, n, unsafe_cap);
    }
    if (enum_cmd->parsed()) {
      return run_enum(kind_name, n, out_path, unsafe_cap);
    }
    if (member->parsed()) {
      return run_member(kind_name, n, elt);
    }
    if (green->parsed()) {
      return run_green(kind_name, n, dot_path, json, unsafe_cap);
    }
    if (congruences->parsed()) {
      return run_congruences(kind_name, n, list, dot_path, unsafe_cap);
    }
    if (rank->parsed()) {
      return run_rank(kind_name, n, verify_min_set, exhaustive_r, anchor_name);
    }
    if (selftest->parsed()) {
      return aoperm::run_acceptance(std::cout) == 0 ? kOk : kMathFailure;
    }
  } catch (aoperm::ResourceError const& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (CLI::ValidationError const& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
