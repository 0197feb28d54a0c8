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

#include "pfmatroid/catalog.hpp"

#include <algorithm>
#include <bit>

#include "pfmatroid/quat.hpp"

namespace pfm::catalog {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

RElem rat(const RingPtr& r, long num, long den = 1) {
  return r->from_scalar(r->base().from_rational(mpq_class(num, den)));
}

// --- U(2,3) over the regular partial field: [I | (1,1)^T] ----------------

ChainGroupRep u23_rep() {
  auto R = Ring::rationals();
  RMatrix m = RMatrix::from_rows(
      R, {"1", "2"}, {"1", "2", "3"},
      {{rat(R, 1), rat(R, 0), rat(R, 1)}, {rat(R, 0), rat(R, 1), rat(R, 1)}});
  return make_strong_rep(PartialField::regular(), std::move(m));
}

// --- the rank-3 configuration of two collinear triples and their cross
// --- joins, with the closing line removed (9 points, 8 long lines) --------

Matroid nonpappus_matroid() {
  std::vector<std::vector<int>> lines = {{1, 2, 3}, {4, 5, 6}, {1, 5, 7},
                                         {2, 4, 7}, {1, 6, 8}, {3, 4, 8},
                                         {2, 6, 9}, {3, 5, 9}};
  std::vector<uint64_t> line_masks;
  for (const auto& l : lines) {
    uint64_t m = 0;
    for (int e : l) m |= uint64_t{1} << (e - 1);
    line_masks.push_back(m);
  }
  std::vector<uint64_t> bases;
  for (int a = 0; a < 9; ++a) {
    for (int b = a + 1; b < 9; ++b) {
      for (int c = b + 1; c < 9; ++c) {
        uint64_t m = (uint64_t{1} << a) | (uint64_t{1} << b) | (uint64_t{1} << c);
        if (std::find(line_masks.begin(), line_masks.end(), m) ==
            line_masks.end()) {
          bases.push_back(m);
        }
      }
    }
  }
  return Matroid::from_bases(numbered("", 1, 9), std::move(bases));
}

// --- non-Pappus over the rational quaternions, with the two
// --- non-commuting entries taken as i and j --------------------------------

ChainGroupRep nonpappus_skew_rep() {
  auto H = Ring::quaternion(BaseField::rationals());
  const BaseField& F = H->base();
  auto qe = [&](long a, long b, long c, long d) {
    return H->quaternion_elem(F.from_long(a), F.from_long(b), F.from_long(c),
                              F.from_long(d));
  };
  RElem o = qe(1, 0, 0, 0), z = qe(0, 0, 0, 0);
  RElem a = qe(0, 1, 0, 0);   // i
  RElem b = qe(0, 0, 1, 0);   // j
  RElem ab = a * b;           // k
  RElem ba = b * a;           // -k
  RMatrix m = RMatrix::from_rows(
      H, {"1", "2", "3"}, numbered("", 1, 9),
      {{o, z, z, o, a, o, a, ab, ab},
       {z, o, z, o, o, b, ba, b, ba},
       {z, z, o, o, o, o, o, o, o}});
  return make_strong_rep(PartialField::all_units(H), std::move(m));
}

// --- non-Pappus over the 2x2 rational matrix ring --------------------------

ChainGroupRep nonpappus_m2q_rep() {
  auto M2 = Ring::matrix_ring(2, BaseField::rationals());
  const BaseField& F = M2->base();
  auto blk = [&](long a, long b, long c, long d) {
    return M2->from_coords({F.from_long(a), F.from_long(b), F.from_long(c),
                            F.from_long(d)});
  };
  RElem o = blk(1, 0, 0, 1), z = blk(0, 0, 0, 0);
  RElem a = blk(2, 2, 0, 2);
  RElem b = blk(3, 0, -3, 3);
  RElem ab = a * b;  // [[0,6],[-6,6]]
  RElem ba = b * a;  // [[6,6],[-6,0]]
  RMatrix m = RMatrix::from_rows(
      M2, {"1", "2", "3"}, numbered("", 1, 9),
      {{o, z, z, o, a, o, a, ab, ab},
       {z, o, z, o, o, b, ba, b, ba},
       {z, z, o, o, o, o, o, o, o}});
  return make_strong_rep(
      PartialField::matrix_partial_field(2, BaseField::rationals()),
      std::move(m));
}

// --- its 6x18 rational unwrapping, entered independently --------------------

RMatrix nonpappus_unwrapped_matrix() {
  auto R = Ring::rationals();
  const std::vector<std::vector<long>> rows = {
      {1, 0, 0, 0, 0, 0, 1, 0, 2, 2, 1, 0, 2, 2, 0, 6, 0, 6},
      {0, 1, 0, 0, 0, 0, 0, 1, 0, 2, 0, 1, 0, 2, -6, 6, -6, 6},
      {0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 3, 0, 6, 6, 3, 0, 6, 6},
      {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, -3, 3, -6, 0, -3, 3, -6, 0},
      {0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
      {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}};
  std::vector<std::string> rl, cl;
  for (int i = 1; i <= 3; ++i) {
    rl.push_back(std::to_string(i) + ".1");
    rl.push_back(std::to_string(i) + ".2");
  }
  for (int e = 1; e <= 9; ++e) {
    cl.push_back(std::to_string(e) + ".1");
    cl.push_back(std::to_string(e) + ".2");
  }
  std::vector<std::vector<RElem>> entries;
  for (const auto& r : rows) {
    std::vector<RElem> er;
    for (long v : r) er.push_back(rat(R, v));
    entries.push_back(std::move(er));
  }
  return RMatrix::from_rows(R, rl, cl, entries);
}

// --- the 8-element rank-4 matroid with five prescribed 4-point planes -------

Matroid vamos_matroid() {
  std::vector<std::vector<int>> planes = {
      {1, 2, 5, 6}, {1, 2, 7, 8}, {5, 6, 7, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}};
  std::vector<uint64_t> plane_masks;
  for (const auto& p : planes) {
    uint64_t m = 0;
    for (int e : p) m |= uint64_t{1} << (e - 1);
    plane_masks.push_back(m);
  }
  std::vector<uint64_t> bases;
  for (uint64_t m = 0; m < (1u << 8); ++m) {
    if (std::popcount(m) != 4) continue;
    if (std::find(plane_masks.begin(), plane_masks.end(), m) ==
        plane_masks.end()) {
      bases.push_back(m);
    }
  }
  return Matroid::from_bases(numbered("", 1, 8), std::move(bases));
}

// --- the ternary Reid geometry ----------------------------------------------

ChainGroupRep reid_rep() {
  auto G3 = Ring::field(BaseField::gf(3));
  const std::vector<std::vector<long>> rows = {{1, 0, 0, 1, 1, 1, 0, 0, 1},
                                               {0, 1, 0, 1, 1, 2, 1, 1, 0},
                                               {0, 0, 1, 1, 0, 0, 1, 2, 1}};
  std::vector<std::vector<RElem>> entries;
  for (const auto& r : rows) {
    std::vector<RElem> er;
    for (long v : r) er.push_back(G3->from_long(v));
    entries.push_back(std::move(er));
  }
  RMatrix m = RMatrix::from_rows(G3, {"1", "2", "3"}, numbered("", 1, 9),
                                 entries);
  return make_strong_rep(PartialField::of_field(BaseField::gf(3)),
                         std::move(m));
}

// --- the rank-3 group geometry of the eight-element quaternion group --------
// Column families around the three joints; the group entries run in the
// order 1, -1, i, -i, j, -j, k, -k.

RMatrix dowling_matrix(const RingPtr& R) {
  const BaseField& F = R->base();
  auto qe = [&](long a, long b, long c, long d) {
    return R->quaternion_elem(F.from_long(a), F.from_long(b), F.from_long(c),
                              F.from_long(d));
  };
  std::vector<RElem> group = {qe(1, 0, 0, 0), qe(-1, 0, 0, 0), qe(0, 1, 0, 0),
                              qe(0, -1, 0, 0), qe(0, 0, 1, 0), qe(0, 0, -1, 0),
                              qe(0, 0, 0, 1), qe(0, 0, 0, -1)};
  std::vector<std::string> cols = {"e1", "e2", "e3"};
  for (char fam : {'a', 'b', 'c'}) {
    for (int t = 1; t <= 8; ++t) cols.push_back(std::string(1, fam) + std::to_string(t));
  }
  RElem one = R->one(), zero = R->zero();
  return RMatrix::build(
      R, {"e1", "e2", "e3"}, cols, [&](size_t i, size_t j) -> RElem {
        if (j < 3) return i == j ? one : zero;
        size_t fam = (j - 3) / 8, t = (j - 3) % 8;
        const RElem& g = group[t];
        if (fam == 0) return i == 0 ? -one : (i == 1 ? g : zero);
        if (fam == 1) return i == 1 ? -one : (i == 2 ? g : zero);
        return i == 0 ? g : (i == 2 ? -one : zero);
      });
}

ChainGroupRep dowling_h_rep() {
  auto H = Ring::quaternion(BaseField::rationals());
  return make_strong_rep(PartialField::all_units(H), dowling_matrix(H));
}

ChainGroupRep dowling_r3_rep() {
  auto R3 = Ring::gf3_quaternion();
  return make_strong_rep(PartialField::gf3_quaternion_pf(),
                         dowling_matrix(R3));
}

// --- direct sum of the Reid geometry with the group geometry, read over the
// --- 81-element quaternion algebra ------------------------------------------

ChainGroupRep counterexample_rep() {
  auto R3 = Ring::gf3_quaternion();
  const BaseField& F = R3->base();
  const std::vector<std::vector<long>> reid = {{1, 0, 0, 1, 1, 1, 0, 0, 1},
                                               {0, 1, 0, 1, 1, 2, 1, 1, 0},
                                               {0, 0, 1, 1, 0, 0, 1, 2, 1}};
  RMatrix dow = dowling_matrix(R3);
  std::vector<std::string> rows = {"r1", "r2", "r3", "e1", "e2", "e3"};
  std::vector<std::string> cols = numbered("r", 1, 9);
  cols.insert(cols.end(), dow.col_labels().begin(), dow.col_labels().end());
  RMatrix big = RMatrix::build(
      R3, rows, cols, [&](size_t i, size_t j) -> RElem {
        if (i < 3) {
          if (j < 9) return R3->from_scalar(F.from_long(reid[i][j]));
          return R3->zero();
        }
        if (j < 9) return R3->zero();
        return dow.at(i - 3, j - 9);
      });
  return make_strong_rep(PartialField::gf3_quaternion_pf(), std::move(big));
}

// --- U(2,6) over unit quaternions: 1, p, q, r at pairwise distance one ------
// Real parts 1/2; the imaginary parts solve the Gram system with pairwise
// inner product 1/4, which forces the golden-ratio coordinates over
// Q(sqrt 5): p = (1+i+j+k)/2, q = (1-i+j+k)/2,
// r = 1/2 + (1+sqrt5)/4 j + (1-sqrt5)/4 k.

ChainGroupRep u26_rep() {
  BaseField Q5 = BaseField::quadratic(5);
  auto H5 = Ring::quaternion(Q5);
  FVal half = Q5.from_rational(mpq_class(1, 2));
  RElem p = H5->quaternion_elem(half, half, half, half);
  RElem q = H5->quaternion_elem(half, Q5.neg(half), half, half);
  RElem r = H5->quaternion_elem(
      half, Q5.zero(), Q5.from_quadratic(mpq_class(1, 4), mpq_class(1, 4)),
      Q5.from_quadratic(mpq_class(1, 4), mpq_class(-1, 4)));
  RElem one = H5->one(), zero = H5->zero();
  RMatrix m = RMatrix::from_rows(
      H5, {"1", "2"}, numbered("", 1, 6),
      {{one, zero, one, one, one, one}, {zero, one, one, p, q, r}});
  return make_strong_rep(PartialField::quaternionic_unimodular(Q5),
                         std::move(m));
}

// --- a small strong dyadic matrix and its image in GF(5) --------------------

ChainGroupRep dyadic_example_rep() {
  auto D = Ring::dyadic();
  RMatrix m = RMatrix::from_rows(
      D, {"1", "2"}, numbered("", 1, 4),
      {{rat(D, 1), rat(D, 0), rat(D, 1), rat(D, 1)},
       {rat(D, 0), rat(D, 1), rat(D, 1, 2), rat(D, 1)}});
  return make_strong_rep(PartialField::dyadic(), std::move(m));
}

ChainGroupRep dyadic_example_gf5_rep() {
  return apply_hom(dyadic_example_rep(), gfp_hom(5), gfp_target(5));
}

// --- chain sets for the Tutte criterion -------------------------------------

ChainSet u23_chains() {
  auto R = Ring::rationals();
  ChainSet cs{PartialField::regular(),
              Matroid::uniform(2, numbered("", 1, 3)),
              {}};
  cs.chains.push_back({{"1", rat(R, 1)}, {"2", rat(R, 1)}});
  cs.chains.push_back({{"1", rat(R, 1)}, {"3", rat(R, 1)}});
  cs.chains.push_back({{"2", rat(R, 1)}, {"3", rat(R, -1)}});
  return cs;
}

// The third chain is scaled wrongly in one coordinate, so the unique modular
// triple admits no group scalars.
ChainSet u23_chains_perturbed() {
  auto D = Ring::dyadic();
  ChainSet cs{PartialField::dyadic(),
              Matroid::uniform(2, numbered("", 1, 3)),
              {}};
  cs.chains.push_back({{"1", rat(D, 1)}, {"2", rat(D, 1)}});
  cs.chains.push_back({{"1", rat(D, 1)}, {"3", rat(D, 1)}});
  cs.chains.push_back({{"2", rat(D, 1)}, {"3", rat(D, -2)}});
  return cs;
}

ChainSet nonpappus_chains() {
  ChainGroupRep rep = nonpappus_skew_rep();
  Matroid m = matroid_of(rep);
  return ChainSet{rep.pf, m, cocircuit_chains(rep, m)};
}

ChainGroupRep k4_rep() {
  GraphDoc k4;
  k4.vertices = 4;
  for (unsigned a = 1; a <= 4; ++a) {
    for (unsigned b = a + 1; b <= 4; ++b) k4.edges.push_back({a, b});
  }
  return graph_to_qu(k4);
}

struct Builder {
  const char* name;
  const char* note;
  CatalogEntry (*make)();
};

CatalogEntry entry(std::string name, std::string note) {
  CatalogEntry e;
  e.name = std::move(name);
  e.note = std::move(note);
  return e;
}

const Builder kBuilders[] = {
    {"u23",
     "uniform rank-2 matroid on three elements over the regular partial "
     "field",
     [] {
       CatalogEntry e = entry("u23", "");
       e.rep = u23_rep();
       e.expect_rank = 2;
       e.expect_elements = 3;
       e.expect_bases = 3;
       return e;
     }},
    {"nonpappus-skew",
     "the nine-point configuration violating the hexagon closure theorem, "
     "coordinatized over the rational quaternions with non-commuting "
     "entries i and j",
     [] {
       CatalogEntry e = entry("nonpappus-skew", "");
       e.rep = nonpappus_skew_rep();
       e.expect_rank = 3;
       e.expect_elements = 9;
       e.expect_bases = 76;
       return e;
     }},
    {"nonpappus-m2q",
     "the same configuration coordinatized over the ring of 2x2 rational "
     "matrices with its invertible elements as the group",
     [] {
       CatalogEntry e = entry("nonpappus-m2q", "");
       e.rep = nonpappus_m2q_rep();
       e.expect_rank = 3;
       e.expect_elements = 9;
       e.expect_bases = 76;
       return e;
     }},
    {"nonpappus-unwrapped",
     "the 6x18 rational block expansion of the 2x2-matrix-ring "
     "coordinatization; column pairs span the point subspaces",
     [] {
       CatalogEntry e = entry("nonpappus-unwrapped", "");
       e.matrix = nonpappus_unwrapped_matrix();
       return e;
     }},
    {"nonpappus-matroid",
     "the configuration itself: two collinear triples, their six cross "
     "joins on three further points, closing line removed",
     [] {
       CatalogEntry e = entry("nonpappus-matroid", "");
       e.matroid = nonpappus_matroid();
       e.expect_rank = 3;
       e.expect_elements = 9;
       e.expect_bases = 76;
       return e;
     }},
    {"vamos",
     "the eight-element rank-4 matroid whose five 4-point planes block "
     "every coordinatization",
     [] {
       CatalogEntry e = entry("vamos", "");
       e.matroid = vamos_matroid();
       e.expect_rank = 4;
       e.expect_elements = 8;
       e.expect_bases = 65;
       return e;
     }},
    {"reid-gf3",
     "the ternary Reid geometry: nine points of rank three over GF(3), "
     "forcing characteristic three",
     [] {
       CatalogEntry e = entry("reid-gf3", "");
       e.rep = reid_rep();
       e.expect_rank = 3;
       e.expect_elements = 9;
       e.expect_bases = 69;
       return e;
     }},
    {"dowling-q8-H",
     "rank-3 group geometry of the quaternion group {±1,±i,±j,±k} over the "
     "rational quaternions; 3 joints and 24 labeled points",
     [] {
       CatalogEntry e = entry("dowling-q8-H", "");
       e.rep = dowling_h_rep();
       e.expect_rank = 3;
       e.expect_elements = 27;
       e.expect_bases = 2501;
       return e;
     }},
    {"dowling-q8-r3",
     "the same matrix read over the 81-element quaternion algebra on GF(3), "
     "with all units as the group",
     [] {
       CatalogEntry e = entry("dowling-q8-r3", "");
       e.rep = dowling_r3_rep();
       e.expect_rank = 3;
       e.expect_elements = 27;
       e.expect_bases = 2501;
       return e;
     }},
    {"counterexample-r9-q3",
     "direct sum of the Reid geometry with the quaternion-group geometry, "
     "representable over the finite ring GF(3)[i,j,k] though over no skew "
     "field (the ring has zero divisors)",
     [] {
       CatalogEntry e = entry("counterexample-r9-q3", "");
       e.rep = counterexample_rep();
       e.expect_rank = 6;
       e.expect_elements = 36;
       e.expect_bases = 172569;
       return e;
     }},
    {"u26-qu",
     "uniform rank-2 matroid on six elements over unit-norm quaternions; "
     "the four non-identity slopes sit at pairwise distance one, which "
     "forces golden-ratio coordinates over Q(sqrt 5)",
     [] {
       CatalogEntry e = entry("u26-qu", "");
       e.rep = u26_rep();
       e.expect_rank = 2;
       e.expect_elements = 6;
       e.expect_bases = 15;
       return e;
     }},
    {"dyadic-example",
     "a strong matrix over the dyadic partial field (signed powers of two)",
     [] {
       CatalogEntry e = entry("dyadic-example", "");
       e.rep = dyadic_example_rep();
       e.expect_rank = 2;
       e.expect_elements = 4;
       e.expect_bases = 6;
       return e;
     }},
    {"dyadic-example-gf5",
     "the entrywise image of the dyadic example in GF(5), with 1/2 sent to "
     "the inverse of 2",
     [] {
       CatalogEntry e = entry("dyadic-example-gf5", "");
       e.rep = dyadic_example_gf5_rep();
       e.expect_rank = 2;
       e.expect_elements = 4;
       e.expect_bases = 6;
       return e;
     }},
    {"k4-graphic",
     "signed incidence matrix of the complete graph on four vertices over "
     "the unit-norm quaternions; bases are the spanning trees",
     [] {
       CatalogEntry e = entry("k4-graphic", "");
       e.rep = k4_rep();
       e.expect_rank = 3;
       e.expect_elements = 6;
       e.expect_bases = 16;
       return e;
     }},
    {"u23-chains",
     "primitive chains for the three cocircuits of u23 over the regular "
     "partial field; the single modular triple balances with scalars "
     "(1,-1,-1)",
     [] {
       CatalogEntry e = entry("u23-chains", "");
       e.chains = u23_chains();
       return e;
     }},
    {"u23-chains-perturbed",
     "the same chains with one coordinate doubled: primitive over the "
     "dyadic group, but the modular triple admits no balancing scalars",
     [] {
       CatalogEntry e = entry("u23-chains-perturbed", "");
       e.chains = u23_chains_perturbed();
       return e;
     }},
    {"nonpappus-chains",
     "primitive chains for all cocircuits of the skew nine-point "
     "configuration, extracted from pivots of its representation",
     [] {
       CatalogEntry e = entry("nonpappus-chains", "");
       e.chains = nonpappus_chains();
       return e;
     }},
};

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& b : kBuilders) out.push_back(b.name);
  return out;
}

CatalogEntry get(const std::string& name) {
  for (const auto& b : kBuilders) {
    if (name == b.name) {
      CatalogEntry e = b.make();
      e.note = b.note;
      return e;
    }
  }
  throw DomainError("unknown catalog entry '" + name + "'");
}

}  // namespace pfm::catalog
