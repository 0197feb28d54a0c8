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

#include "pfmatroid/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pfm::io {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) throw ParseError(path + "/" + key, "unknown field");
  }
}

const json& need(const json& j, const std::string& key,
                 const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, "missing field '" + key + "'");
  return *it;
}

std::string need_string(const json& j, const std::string& key,
                        const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) throw ParseError(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

json rat_to_json(const mpq_class& v) {
  if (v.get_den() == 1) {
    mpz_class n = v.get_num();
    if (n.fits_slong_p()) return json(n.get_si());
  }
  return json(v.get_str());
}

mpq_class rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return mpq_class(static_cast<long>(j.get<long long>()));
  }
  if (j.is_string()) {
    try {
      mpq_class v(j.get<std::string>());
      v.canonicalize();
      return v;
    } catch (const std::invalid_argument&) {
      throw ParseError(path, "malformed rational '" + j.get<std::string>() + "'");
    }
  }
  throw ParseError(path, "expected an integer or a rational string");
}

// Real-subfield literal: bare rational, or [u, v] for u + v*sqrt(d).
json real_to_json(const BaseField& f, const mpq_class& u, const mpq_class& v) {
  if (f.sqrt_param() == 0 || v == 0) return rat_to_json(u);
  return json::array({rat_to_json(u), rat_to_json(v)});
}

void real_from_json(const BaseField& f, const json& j, const std::string& path,
                    mpq_class& u, mpq_class& v) {
  if (j.is_array()) {
    if (f.sqrt_param() == 0) {
      throw ParseError(path, "field has no adjoined square root");
    }
    if (j.size() != 2) throw ParseError(path, "expected [u, v]");
    u = rat_from_json(j[0], path + "/0");
    v = rat_from_json(j[1], path + "/1");
    return;
  }
  u = rat_from_json(j, path);
  v = 0;
}

}  // namespace

json fval_to_json(const BaseField& f, const FVal& v) {
  if (f.kind() == BaseField::Kind::kGFp) return rat_to_json(v.c[0]);
  if (!f.has_imaginary()) return real_to_json(f, v.c[0], v.c[1]);
  return json::array(
      {real_to_json(f, v.c[0], v.c[1]), real_to_json(f, v.c[2], v.c[3])});
}

FVal fval_from_json(const BaseField& f, const json& j, const std::string& path) {
  if (f.kind() == BaseField::Kind::kGFp) {
    return f.from_rational(rat_from_json(j, path));
  }
  FVal out;
  if (!f.has_imaginary()) {
    real_from_json(f, j, path, out.c[0], out.c[1]);
    return out;
  }
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(path, "expected [re, im]");
    real_from_json(f, j[0], path + "/0", out.c[0], out.c[1]);
    real_from_json(f, j[1], path + "/1", out.c[2], out.c[3]);
    return out;
  }
  // Bare scalar: purely real rational.
  out.c[0] = rat_from_json(j, path);
  return out;
}

json ring_to_json(const Ring& ring) {
  json base;
  const BaseField& f = ring.base();
  if (f.kind() == BaseField::Kind::kGFp) {
    base = json{{"kind", "gf"}, {"p", f.modulus()}};
  } else {
    base = json{{"kind", "rationals"}};
    if (f.sqrt_param()) base["sqrt"] = f.sqrt_param();
    if (f.has_imaginary()) base["i"] = true;
  }
  json out;
  switch (ring.kind()) {
    case RingKind::kField:
      out = json{{"kind", "field"}, {"base", base}};
      break;
    case RingKind::kDyadic:
      out = json{{"kind", "dyadic"}};
      break;
    case RingKind::kQuaternion:
      out = json{{"kind", "quaternion"}, {"base", base}};
      break;
    case RingKind::kMatrixRing:
      out = json{{"kind", "matrix"}, {"n", ring.matrix_size()}, {"base", base}};
      break;
    case RingKind::kGF3Quaternion:
      out = json{{"kind", "gf3-quaternion"}};
      break;
  }
  if (ring.is_opposite()) out["opposite"] = true;
  return out;
}

namespace {

BaseField base_from_json(const json& j, const std::string& path) {
  check_keys(j, {"kind", "p", "sqrt", "i"}, path);
  std::string kind = need_string(j, "kind", path);
  if (kind == "gf") {
    const json& p = need(j, "p", path);
    if (!p.is_number_unsigned() && !p.is_number_integer()) {
      throw ParseError(path + "/p", "expected a prime");
    }
    return BaseField::gf(p.get<unsigned>());
  }
  if (kind != "rationals") {
    throw ParseError(path + "/kind", "unknown base field '" + kind + "'");
  }
  BaseField f = BaseField::rationals();
  if (j.count("sqrt")) f = BaseField::quadratic(j["sqrt"].get<unsigned>());
  if (j.count("i") && j["i"].get<bool>()) f = f.complexified();
  return f;
}

}  // namespace

RingPtr ring_from_json(const json& j, const std::string& path) {
  check_keys(j, {"kind", "base", "n", "opposite"}, path);
  std::string kind = need_string(j, "kind", path);
  RingPtr ring;
  if (kind == "field") {
    ring = Ring::field(base_from_json(need(j, "base", path), path + "/base"));
  } else if (kind == "dyadic") {
    ring = Ring::dyadic();
  } else if (kind == "quaternion") {
    ring = Ring::quaternion(base_from_json(need(j, "base", path), path + "/base"));
  } else if (kind == "matrix") {
    const json& n = need(j, "n", path);
    ring = Ring::matrix_ring(n.get<unsigned>(),
                             base_from_json(need(j, "base", path), path + "/base"));
  } else if (kind == "gf3-quaternion") {
    ring = Ring::gf3_quaternion();
  } else {
    throw ParseError(path + "/kind", "unknown ring kind '" + kind + "'");
  }
  if (j.count("opposite") && j["opposite"].get<bool>()) ring = ring->opposite();
  return ring;
}

json elem_to_json(const RElem& x) {
  const RingPtr& r = x.ring();
  const BaseField& f = r->base();
  switch (r->kind()) {
    case RingKind::kField:
    case RingKind::kDyadic:
      return fval_to_json(f, x.coord(0));
    case RingKind::kQuaternion:
    case RingKind::kGF3Quaternion: {
      json arr = json::array();
      for (int t = 0; t < 4; ++t) arr.push_back(fval_to_json(f, x.coord(t)));
      return arr;
    }
    case RingKind::kMatrixRing: {
      const unsigned n = r->matrix_size();
      json rows = json::array();
      for (unsigned i = 0; i < n; ++i) {
        json row = json::array();
        for (unsigned jx = 0; jx < n; ++jx) {
          row.push_back(fval_to_json(f, x.coord(i * n + jx)));
        }
        rows.push_back(row);
      }
      return rows;
    }
  }
  throw DomainError("unsupported ring kind");
}

RElem elem_from_json(const RingPtr& ring, const json& j,
                     const std::string& path) {
  const BaseField& f = ring->base();
  switch (ring->kind()) {
    case RingKind::kField:
    case RingKind::kDyadic:
      return ring->from_coords({fval_from_json(f, j, path)});
    case RingKind::kQuaternion:
    case RingKind::kGF3Quaternion: {
      if (!j.is_array() || j.size() != 4) {
        throw ParseError(path, "expected a quaternion [a, b, c, d]");
      }
      std::vector<FVal> c;
      for (int t = 0; t < 4; ++t) {
        c.push_back(fval_from_json(f, j[t], path + "/" + std::to_string(t)));
      }
      return ring->from_coords(std::move(c));
    }
    case RingKind::kMatrixRing: {
      const unsigned n = ring->matrix_size();
      if (!j.is_array() || j.size() != n) {
        throw ParseError(path, "expected an n x n block");
      }
      std::vector<FVal> c(n * n);
      for (unsigned i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) {
          throw ParseError(path + "/" + std::to_string(i), "expected a row of length n");
        }
        for (unsigned jx = 0; jx < n; ++jx) {
          c[i * n + jx] = fval_from_json(
              f, j[i][jx], path + "/" + std::to_string(i) + "/" + std::to_string(jx));
        }
      }
      return ring->from_coords(std::move(c));
    }
  }
  throw ParseError(path, "unsupported ring kind");
}

json group_to_json(const PartialField& pf) {
  return std::visit(
      [&](const auto& g) -> json {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, GroupAllUnits>) {
          return json{{"kind", "all-units"}};
        } else if constexpr (std::is_same_v<T, GroupSigns>) {
          return json{{"kind", "signs"}};
        } else if constexpr (std::is_same_v<T, GroupPowTwoSigns>) {
          return json{{"kind", "pow2-signs"}};
        } else if constexpr (std::is_same_v<T, GroupNormOne>) {
          return json{{"kind", "norm-one"}};
        } else {
          json elems = json::array();
          for (const auto& e : g.generators) elems.push_back(elem_to_json(e));
          return json{{"kind", "generated-by"}, {"elements", elems}};
        }
      },
      pf.group());
}

PartialField pf_from_json(const json& ring_j, const json& group_j,
                          const std::string& path) {
  RingPtr ring = ring_from_json(ring_j, path + "/ring");
  check_keys(group_j, {"kind", "elements"}, path + "/partial_field");
  std::string kind = need_string(group_j, "kind", path + "/partial_field");
  if (kind == "all-units") return PartialField::all_units(ring);
  if (kind == "signs") return PartialField(ring, GroupSigns{});
  if (kind == "pow2-signs") return PartialField(ring, GroupPowTwoSigns{});
  if (kind == "norm-one") return PartialField(ring, GroupNormOne{});
  if (kind == "generated-by") {
    const json& elems = need(group_j, "elements", path + "/partial_field");
    if (!elems.is_array()) {
      throw ParseError(path + "/partial_field/elements", "expected an array");
    }
    std::vector<RElem> gens;
    for (size_t i = 0; i < elems.size(); ++i) {
      gens.push_back(elem_from_json(
          ring, elems[i],
          path + "/partial_field/elements/" + std::to_string(i)));
    }
    return PartialField::generated_by(ring, std::move(gens));
  }
  throw ParseError(path + "/partial_field/kind", "unknown group '" + kind + "'");
}

namespace {

std::vector<std::string> labels_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of labels");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& v = j[i];
    if (v.is_string()) {
      out.push_back(v.get<std::string>());
    } else if (v.is_number_integer() || v.is_number_unsigned()) {
      out.push_back(std::to_string(v.get<long long>()));
    } else {
      throw ParseError(path + "/" + std::to_string(i), "expected a label");
    }
  }
  return out;
}

json labels_to_json(const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

}  // namespace

json rep_to_json(const ChainGroupRep& rep) {
  json entries = json::array();
  for (size_t i = 0; i < rep.mat.nrows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < rep.mat.ncols(); ++j) {
      row.push_back(elem_to_json(rep.mat.at(i, j)));
    }
    entries.push_back(row);
  }
  return json{{"ring", ring_to_json(*rep.mat.ring())},
              {"partial_field", group_to_json(rep.pf)},
              {"form", rep.form == RepForm::kStrong ? "strong" : "weak"},
              {"rows", labels_to_json(rep.mat.row_labels())},
              {"cols", labels_to_json(rep.mat.col_labels())},
              {"entries", entries}};
}

ChainGroupRep rep_from_json(const json& j) {
  const std::string path = "";
  check_keys(j, {"ring", "partial_field", "form", "rows", "cols", "entries"},
             path);
  PartialField pf = pf_from_json(need(j, "ring", path),
                                 need(j, "partial_field", path), path);
  std::vector<std::string> rows = labels_from_json(need(j, "rows", path), "/rows");
  std::vector<std::string> cols = labels_from_json(need(j, "cols", path), "/cols");
  const json& entries = need(j, "entries", path);
  if (!entries.is_array() || entries.size() != rows.size()) {
    throw ParseError("/entries", "expected one row of entries per row label");
  }
  std::vector<std::vector<RElem>> grid;
  for (size_t i = 0; i < rows.size(); ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols.size()) {
      throw ParseError("/entries/" + std::to_string(i),
                       "expected one entry per column label");
    }
    std::vector<RElem> r;
    for (size_t jx = 0; jx < cols.size(); ++jx) {
      r.push_back(elem_from_json(
          pf.ring(), row[jx],
          "/entries/" + std::to_string(i) + "/" + std::to_string(jx)));
    }
    grid.push_back(std::move(r));
  }
  RMatrix m = RMatrix::from_rows(pf.ring(), rows, cols, grid);
  std::string form = "weak";
  if (j.count("form")) {
    form = j["form"].get<std::string>();
    if (form != "weak" && form != "strong") {
      throw ParseError("/form", "expected 'weak' or 'strong'");
    }
  }
  if (form == "strong") return make_strong_rep(std::move(pf), std::move(m));
  return make_weak_rep(std::move(pf), std::move(m));
}

json matrix_to_json(const RMatrix& m) {
  ChainGroupRep rep{PartialField::all_units(m.ring()), m, RepForm::kWeak};
  return rep_to_json(rep);
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (uint64_t b : m.bases()) bases.push_back(labels_to_json(m.labels_of(b)));
  return json{{"ground", labels_to_json(m.ground())}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  check_keys(j, {"ground", "bases"}, "");
  std::vector<std::string> ground =
      labels_from_json(need(j, "ground", ""), "/ground");
  const json& bases = need(j, "bases", "");
  if (!bases.is_array()) throw ParseError("/bases", "expected an array");
  std::vector<std::vector<std::string>> lists;
  for (size_t i = 0; i < bases.size(); ++i) {
    lists.push_back(labels_from_json(bases[i], "/bases/" + std::to_string(i)));
  }
  try {
    return Matroid::from_basis_lists(std::move(ground), lists);
  } catch (const DomainError& e) {
    throw ParseError("/bases", e.what());
  }
}

json chainset_to_json(const catalog::ChainSet& cs) {
  json chains = json::array();
  for (const auto& chain : cs.chains) {
    json c = json::object();
    for (const auto& [label, value] : chain) c[label] = elem_to_json(value);
    chains.push_back(c);
  }
  return json{{"ring", ring_to_json(*cs.pf.ring())},
              {"partial_field", group_to_json(cs.pf)},
              {"matroid", matroid_to_json(cs.matroid)},
              {"chains", chains}};
}

catalog::ChainSet chainset_from_json(const json& j) {
  check_keys(j, {"ring", "partial_field", "matroid", "chains"}, "");
  PartialField pf =
      pf_from_json(need(j, "ring", ""), need(j, "partial_field", ""), "");
  Matroid m = matroid_from_json(need(j, "matroid", ""));
  const json& chains = need(j, "chains", "");
  if (!chains.is_array()) throw ParseError("/chains", "expected an array");
  std::vector<Chain> out;
  for (size_t i = 0; i < chains.size(); ++i) {
    const json& c = chains[i];
    if (!c.is_object()) {
      throw ParseError("/chains/" + std::to_string(i), "expected an object");
    }
    Chain chain;
    for (const auto& [label, value] : c.items()) {
      chain[label] = elem_from_json(
          pf.ring(), value, "/chains/" + std::to_string(i) + "/" + label);
    }
    out.push_back(std::move(chain));
  }
  return catalog::ChainSet{std::move(pf), std::move(m), std::move(out)};
}

json multilinear_to_json(const MultilinearRep& rep) {
  json blocks = json::array();
  for (const auto& e : rep.ground) {
    const RMatrix& b = rep.blocks.at(e);
    json rows = json::array();
    for (size_t i = 0; i < b.nrows(); ++i) {
      json row = json::array();
      for (size_t jx = 0; jx < b.ncols(); ++jx) {
        row.push_back(fval_to_json(rep.field, b.at(i, jx).coord(0)));
      }
      rows.push_back(row);
    }
    blocks.push_back(json{{"element", e}, {"matrix", rows}});
  }
  json base;
  if (rep.field.kind() == BaseField::Kind::kGFp) {
    base = json{{"kind", "gf"}, {"p", rep.field.modulus()}};
  } else {
    base = json{{"kind", "rationals"}};
    if (rep.field.sqrt_param()) base["sqrt"] = rep.field.sqrt_param();
    if (rep.field.has_imaginary()) base["i"] = true;
  }
  return json{{"field", base},
              {"n", rep.n},
              {"ground", labels_to_json(rep.ground)},
              {"blocks", blocks}};
}

MultilinearRep multilinear_from_json(const json& j) {
  check_keys(j, {"field", "n", "ground", "blocks"}, "");
  MultilinearRep rep;
  rep.field = base_from_json(need(j, "field", ""), "/field");
  rep.n = need(j, "n", "").get<unsigned>();
  rep.ground = labels_from_json(need(j, "ground", ""), "/ground");
  const json& blocks = need(j, "blocks", "");
  if (!blocks.is_array()) throw ParseError("/blocks", "expected an array");
  auto field_ring = Ring::field(rep.field);
  for (size_t bi = 0; bi < blocks.size(); ++bi) {
    const std::string bpath = "/blocks/" + std::to_string(bi);
    check_keys(blocks[bi], {"element", "matrix"}, bpath);
    std::string e;
    {
      const json& ej = need(blocks[bi], "element", bpath);
      if (ej.is_string()) {
        e = ej.get<std::string>();
      } else {
        e = std::to_string(ej.get<long long>());
      }
    }
    const json& mj = need(blocks[bi], "matrix", bpath);
    if (!mj.is_array() || mj.empty()) {
      throw ParseError(bpath + "/matrix", "expected a nonempty array of rows");
    }
    size_t nr = mj.size();
    std::vector<std::string> rl, cl;
    for (size_t i = 1; i <= nr; ++i) rl.push_back("r" + std::to_string(i));
    for (size_t i = 1; i <= rep.n; ++i) cl.push_back(e + "." + std::to_string(i));
    std::vector<std::vector<RElem>> grid;
    for (size_t i = 0; i < nr; ++i) {
      if (!mj[i].is_array() || mj[i].size() != rep.n) {
        throw ParseError(bpath + "/matrix/" + std::to_string(i),
                         "expected rows of length n");
      }
      std::vector<RElem> row;
      for (size_t jx = 0; jx < rep.n; ++jx) {
        row.push_back(field_ring->from_scalar(fval_from_json(
            rep.field, mj[i][jx],
            bpath + "/matrix/" + std::to_string(i) + "/" + std::to_string(jx))));
      }
      grid.push_back(std::move(row));
    }
    rep.blocks.emplace(e, RMatrix::from_rows(field_ring, rl, cl, grid));
  }
  return rep;
}

json graph_to_json(const GraphDoc& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
  return json{{"vertices", g.vertices}, {"edges", edges}};
}

GraphDoc graph_from_json(const json& j) {
  check_keys(j, {"vertices", "edges"}, "");
  GraphDoc g;
  g.vertices = need(j, "vertices", "").get<unsigned>();
  const json& edges = need(j, "edges", "");
  if (!edges.is_array()) throw ParseError("/edges", "expected an array");
  for (size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("/edges/" + std::to_string(i), "expected [u, v]");
    }
    g.edges.emplace_back(e[0].get<unsigned>(), e[1].get<unsigned>());
  }
  return g;
}

json catalog_entry_to_json(const catalog::CatalogEntry& e) {
  if (e.rep) return rep_to_json(*e.rep);
  if (e.matrix) return matrix_to_json(*e.matrix);
  if (e.matroid) return matroid_to_json(*e.matroid);
  if (e.chains) return chainset_to_json(*e.chains);
  throw DomainError("catalog entry has no payload");
}

json parse_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError(filename, "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(filename, e.what());
  }
  return j;
}

std::string pretty(const json& j) { return j.dump(2); }

std::string render_value(const BaseField& f, const FVal& v, bool approx) {
  std::ostringstream os;
  if (f.kind() == BaseField::Kind::kGFp) {
    os << v.c[0].get_str();
    return os.str();
  }
  if (v.c[1] == 0 && v.c[2] == 0 && v.c[3] == 0) {
    os << v.c[0].get_str();
  } else {
    os << fval_to_json(f, v).dump();
  }
  if (approx) {
    double x = v.c[0].get_d();
    if (f.sqrt_param()) x += v.c[1].get_d() * std::sqrt((double)f.sqrt_param());
    os << " (~" << x << ")";
  }
  return os.str();
}

}  // namespace pfm::io
