// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfmatroid/catalog.hpp"
#include "pfmatroid/chain_group.hpp"
#include "pfmatroid/io.hpp"
#include "pfmatroid/multilinear.hpp"
#include "pfmatroid/quat.hpp"

namespace {

using namespace pfm;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i];
  }
  return out;
}

void print_sorted_sets(const Matroid& m, const std::vector<uint64_t>& sets) {
  std::vector<std::string> lines;
  for (uint64_t s : sets) lines.push_back(join(m.labels_of(s)));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << l << "\n";
}

int run_verify(const std::string& file) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  VerifyResult res = verify_rep(rep);
  if (res.ok) {
    std::cout << "ok: all pivot-reachable entries lie in the group\n";
    return kOk;
  }
  const auto& ce = *res.counterexample;
  std::cout << "counterexample: entry at (" << ce.row << ", " << ce.col
            << ") = " << ce.entry.to_string() << "\n";
  std::cout << "pivot path:";
  if (ce.path.empty()) std::cout << " (start matrix)";
  for (const auto& step : ce.path) {
    std::cout << " (" << step.row << "," << step.col << ")";
  }
  std::cout << "\n";
  return kMathFailure;
}

int run_matroid(const std::string& file, bool bases, bool circuits,
                bool cocircuits, const std::string& rank_set) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  Matroid m = matroid_of(rep);
  if (bases) {
    print_sorted_sets(m, m.bases());
    return kOk;
  }
  if (circuits) {
    print_sorted_sets(m, m.circuits());
    return kOk;
  }
  if (cocircuits) {
    print_sorted_sets(m, m.cocircuits());
    return kOk;
  }
  if (!rank_set.empty()) {
    std::cout << m.rank(split_list(rank_set)) << "\n";
    return kOk;
  }
  std::cout << "elements: " << m.size() << "\nrank: " << m.rank_value()
            << "\nbases: " << m.num_bases() << "\n";
  return kOk;
}

int run_dual(const std::string& file) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  ChainGroupRep dual = dual_rep(to_strong(rep));
  std::cout << io::pretty(io::rep_to_json(dual)) << "\n";
  return kOk;
}

int run_minor(const std::string& file, const std::string& del,
              const std::string& con) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  ChainGroupRep result = minor(rep, split_list(del), split_list(con));
  std::cout << io::pretty(io::rep_to_json(result)) << "\n";
  return kOk;
}

int run_hom(const std::string& file, const std::string& target) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  ChainGroupRep image = [&] {
    if (target == "phi") {
      return apply_hom(rep, phi_hom(), phi_target(rep.mat.ring()->base()));
    }
    if (target.rfind("gf:", 0) == 0) {
      unsigned p = static_cast<unsigned>(std::stoul(target.substr(3)));
      return apply_hom(rep, gfp_hom(p), gfp_target(p));
    }
    throw DomainError("unknown homomorphism target '" + target +
                      "' (use gf:<p> or phi)");
  }();
  std::cout << io::pretty(io::rep_to_json(image)) << "\n";
  return kOk;
}

int run_tutte(const std::string& file) {
  catalog::ChainSet cs = io::chainset_from_json(io::parse_file(file));
  TutteResult res = tutte_check(cs.matroid, cs.chains, cs.pf);
  if (res.ok) {
    std::cout << "ok: every modular triple of cocircuits balances in the group\n";
    return kOk;
  }
  std::cout << "failing triple: {" << join(res.failure->x1) << "} {"
            << join(res.failure->x2) << "} {" << join(res.failure->x3)
            << "}\nreason: " << res.failure->reason << "\n";
  return kMathFailure;
}

int run_unwrap(const std::string& file) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  std::cout << io::pretty(io::matrix_to_json(rep.mat.unwrap())) << "\n";
  return kOk;
}

int run_wrap(const std::string& file, unsigned n) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  RMatrix wrapped = RMatrix::wrap(n, rep.mat);
  ChainGroupRep out = make_weak_rep(
      PartialField::matrix_partial_field(n, rep.mat.ring()->base()), wrapped);
  std::cout << io::pretty(io::rep_to_json(out)) << "\n";
  return kOk;
}

int run_count(const std::string& file) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  mpz_class n = count_bases(rep);
  std::cout << n.get_str() << "\n";
  return kOk;
}

int run_marginal(const std::string& file, const std::string& set, bool approx) {
  ChainGroupRep rep = io::rep_from_json(io::parse_file(file));
  FVal v = marginal(rep, split_list(set));
  std::cout << io::render_value(rep.mat.ring()->base(), v, approx) << "\n";
  return kOk;
}

int run_graph(const std::string& file, bool count, const std::string& marg,
              bool approx) {
  GraphDoc g = io::graph_from_json(io::parse_file(file));
  ChainGroupRep rep = graph_to_qu(g);
  if (count) {
    std::cout << count_bases(rep).get_str() << "\n";
    return kOk;
  }
  if (!marg.empty()) {
    FVal v = marginal(rep, split_list(marg));
    std::cout << io::render_value(rep.mat.ring()->base(), v, approx) << "\n";
    return kOk;
  }
  std::cout << io::pretty(io::rep_to_json(rep)) << "\n";
  return kOk;
}

int run_catalog(const std::string& sub, const std::string& name,
                const std::string& dump_dir) {
  if (sub == "list") {
    for (const auto& n : catalog::names()) std::cout << n << "\n";
    return kOk;
  }
  if (sub == "get") {
    catalog::CatalogEntry e = catalog::get(name);
    std::cout << io::pretty(io::catalog_entry_to_json(e)) << "\n";
    return kOk;
  }
  if (sub == "dump") {
    std::filesystem::create_directories(dump_dir);
    for (const auto& n : catalog::names()) {
      catalog::CatalogEntry e = catalog::get(n);
      std::ofstream out(dump_dir + "/" + n + ".json");
      out << io::pretty(io::catalog_entry_to_json(e)) << "\n";
    }
    return kOk;
  }
  throw DomainError("unknown catalog subcommand '" + sub + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact chain-group representations of matroids over skew partial "
      "fields"};
  app.require_subcommand(1);
  bool approx = false;
  app.add_flag("--approx", approx,
               "append decimal approximations to exact outputs");

  std::string file, del, con, target, set_list, marg, cat_sub, cat_name;
  std::string dump_dir = "data/catalog";
  unsigned wrap_n = 2;
  bool f_bases = false, f_circuits = false, f_cocircuits = false;
  std::string rank_set;
  bool g_count = false;

  auto* verify = app.add_subcommand("verify", "strong P-matrix verdict");
  verify->add_option("file", file)->required();

  auto* matroid = app.add_subcommand("matroid", "matroid of a representation");
  matroid->add_option("file", file)->required();
  matroid->add_flag("--bases", f_bases);
  matroid->add_flag("--circuits", f_circuits);
  matroid->add_flag("--cocircuits", f_cocircuits);
  matroid->add_option("--rank", rank_set, "rank of a comma-separated subset");

  auto* dual = app.add_subcommand("dual", "orthogonal representation");
  dual->add_option("file", file)->required();

  auto* minor_cmd = app.add_subcommand("minor", "delete/contract elements");
  minor_cmd->add_option("file", file)->required();
  minor_cmd->add_option("--delete", del, "comma-separated elements");
  minor_cmd->add_option("--contract", con, "comma-separated elements");

  auto* hom = app.add_subcommand("hom", "apply a ring homomorphism");
  hom->add_option("file", file)->required();
  hom->add_option("--target", target, "gf:<p> or phi")->required();

  auto* tutte = app.add_subcommand("tutte", "Tutte representability criterion");
  tutte->add_option("file", file)->required();

  auto* unwrap = app.add_subcommand("unwrap", "block-expand a matrix-ring matrix");
  unwrap->add_option("file", file)->required();

  auto* wrap = app.add_subcommand("wrap", "assemble blocks into a matrix ring");
  wrap->add_option("file", file)->required();
  wrap->add_option("--n", wrap_n, "block size")->required();

  auto* count = app.add_subcommand("count", "number of bases via the "
                                            "quaternionic pseudo-determinant");
  count->add_option("file", file)->required();

  auto* marginal_cmd =
      app.add_subcommand("marginal", "fraction of bases containing a set");
  marginal_cmd->add_option("file", file)->required();
  marginal_cmd->add_option("--set", set_list)->required();

  auto* graph = app.add_subcommand("graph", "spanning-tree counts of a graph");
  graph->add_option("file", file)->required();
  graph->add_flag("--count", g_count);
  graph->add_option("--marginal", marg, "comma-separated edge labels");

  auto* cat = app.add_subcommand("catalog", "built-in instances");
  cat->add_option("sub", cat_sub, "list | get | dump")->required();
  cat->add_option("name", cat_name);
  cat->add_option("--dir", dump_dir, "output directory for dump");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(file);
    if (*matroid)
      return run_matroid(file, f_bases, f_circuits, f_cocircuits, rank_set);
    if (*dual) return run_dual(file);
    if (*minor_cmd) return run_minor(file, del, con);
    if (*hom) return run_hom(file, target);
    if (*tutte) return run_tutte(file);
    if (*unwrap) return run_unwrap(file);
    if (*wrap) return run_wrap(file, wrap_n);
    if (*count) return run_count(file);
    if (*marginal_cmd) return run_marginal(file, set_list, approx);
    if (*graph) return run_graph(file, g_count, marg, approx);
    if (*cat) return run_catalog(cat_sub, cat_name, dump_dir);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotPerfectSquareError& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  } catch (const NotInvertibleError& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
