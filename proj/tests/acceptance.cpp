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
//
// End-to-end acceptance suite. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "pfmatroid/catalog.hpp"
#include "pfmatroid/chain_group.hpp"
#include "pfmatroid/io.hpp"
#include "pfmatroid/multilinear.hpp"
#include "pfmatroid/quat.hpp"
#include "test_util.hpp"

using namespace pfm;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  int number;
  std::string label;
  double limit_seconds;  // 0 = no stated limit
};

void run(const Criterion& c,
         const std::function<void(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = true;
  std::string error;
  auto t0 = Clock::now();
  try {
    body(detail);
  } catch (const std::exception& e) {
    ok = false;
    error = e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (ok && detail.str().rfind("FAIL", 0) == 0) {
    ok = false;
    error = detail.str();
  }
  if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
    ok = false;
    error = "exceeded the stated time limit";
  }
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
       << c.label << " [" << std::fixed;
  line.precision(2);
  line << secs << "s";
  if (c.limit_seconds > 0) line << " / limit " << c.limit_seconds << "s";
  line << "]";
  if (ok && !detail.str().empty()) line << " -- " << detail.str();
  if (!ok) {
    line << " -- " << (error.empty() ? "check failed" : error);
    ++g_failures;
  }
  std::cout << line.str() << std::endl;
}

#define REQUIRE_OR_FAIL(cond, msg)            \
  do {                                        \
    if (!(cond)) {                            \
      out.str(std::string("FAIL: ") + (msg)); \
      return;                                 \
    }                                         \
  } while (0)

// Shared exact instances, computed once and reused across criteria (each
// criterion still performs its own checks).
struct Shared {
  ChainGroupRep m2q = *catalog::get("nonpappus-m2q").rep;
  ChainGroupRep skew = *catalog::get("nonpappus-skew").rep;
  ChainGroupRep reid = *catalog::get("reid-gf3").rep;
  ChainGroupRep dowling_h = *catalog::get("dowling-q8-H").rep;
  ChainGroupRep dowling_r3 = *catalog::get("dowling-q8-r3").rep;
  ChainGroupRep counterexample = *catalog::get("counterexample-r9-q3").rep;
  ChainGroupRep u26 = *catalog::get("u26-qu").rep;
  ChainGroupRep u23 = *catalog::get("u23").rep;
  ChainGroupRep dyadic = *catalog::get("dyadic-example").rep;
  ChainGroupRep dyadic_gf5 = *catalog::get("dyadic-example-gf5").rep;
  ChainGroupRep k4 = *catalog::get("k4-graphic").rep;
  Matroid m2q_matroid = matroid_of(m2q);
  Matroid counterexample_matroid = matroid_of(counterexample);
};

GraphDoc complete_graph(unsigned n) {
  GraphDoc g;
  g.vertices = n;
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = a + 1; b <= n; ++b) g.edges.push_back({a, b});
  }
  return g;
}

GraphDoc complete_bipartite(unsigned a, unsigned b) {
  GraphDoc g;
  g.vertices = a + b;
  for (unsigned u = 1; u <= a; ++u) {
    for (unsigned v = a + 1; v <= a + b; ++v) g.edges.push_back({u, v});
  }
  return g;
}

// --------------------------------------------------------------------------
// 1. Nine-point configuration pipeline.
// --------------------------------------------------------------------------
void criterion1(Shared& sh, std::ostringstream& out) {
  REQUIRE_OR_FAIL(verify_rep(sh.m2q).ok,
                  "verification of the 2x2 matrix-ring coordinatization");
  const Matroid& m = sh.m2q_matroid;
  REQUIRE_OR_FAIL(m.rank_value() == 3 && m.size() == 9, "shape");
  REQUIRE_OR_FAIL(m.num_bases() == 76, "basis count");

  // Independent oracle: a triple is a basis exactly when the corresponding
  // six columns of the block expansion have rank six, computed by a
  // test-local elimination on raw rationals.
  RMatrix flat = *catalog::get("nonpappus-unwrapped").matrix;
  size_t agree = 0;
  for (unsigned a = 0; a < 9; ++a) {
    for (unsigned b = a + 1; b < 9; ++b) {
      for (unsigned c = b + 1; c < 9; ++c) {
        std::vector<std::vector<mpq_class>> cols(6, std::vector<mpq_class>(6));
        unsigned sel[3] = {a, b, c};
        for (unsigned i = 0; i < 6; ++i) {
          for (unsigned s = 0; s < 3; ++s) {
            cols[i][2 * s] = flat.at(i, 2 * sel[s]).coord(0).c[0];
            cols[i][2 * s + 1] = flat.at(i, 2 * sel[s] + 1).coord(0).c[0];
          }
        }
        bool oracle_basis = testutil::oracle_rank(cols) == 6;
        uint64_t mask =
            (uint64_t{1} << a) | (uint64_t{1} << b) | (uint64_t{1} << c);
        REQUIRE_OR_FAIL(oracle_basis == m.is_basis(mask),
                        "oracle disagrees on a triple");
        ++agree;
      }
    }
  }
  REQUIRE_OR_FAIL(agree == 84, "triple enumeration incomplete");

  // Forward direction: the blocks of the expansion represent the matroid.
  MultilinearRep ml = from_matrix(sh.m2q.mat);
  REQUIRE_OR_FAIL(check_multilinear(ml, m).ok, "subspace dimension check");
  // Converse direction: reassembling the blocks yields a verified matrix
  // with the same matroid.
  RMatrix back = to_matrix(ml);
  ChainGroupRep back_rep = make_weak_rep(
      PartialField::matrix_partial_field(2, BaseField::rationals()), back);
  REQUIRE_OR_FAIL(matroid_of(back_rep) == m, "round trip changed the matroid");
  out << "76 bases, oracle and both bridge directions agree";
}

// --------------------------------------------------------------------------
// 2. The direct-sum counterexample over the finite quaternion algebra.
// --------------------------------------------------------------------------
void criterion2(Shared& sh, std::ostringstream& out) {
  REQUIRE_OR_FAIL(verify_rep(sh.counterexample).ok,
                  "verification over GF(3)[i,j,k]");
  // (1+i+j)(1-i-j) = 0: the representing ring has zero divisors.
  auto R3 = sh.counterexample.pf.ring();
  const BaseField& f = R3->base();
  RElem x = R3->quaternion_elem(f.one(), f.one(), f.one(), f.zero());
  RElem y =
      R3->quaternion_elem(f.one(), f.from_long(-1), f.from_long(-1), f.zero());
  REQUIRE_OR_FAIL((x * y).is_zero(), "zero-divisor identity");

  const Matroid& big = sh.counterexample_matroid;
  Matroid reid = matroid_of(sh.reid);
  Matroid dow_r3 = matroid_of(sh.dowling_r3);
  Matroid dow_h = matroid_of(sh.dowling_h);

  // The matroid is the direct sum of the Reid geometry and the group
  // geometry, on the prefixed labels.
  std::vector<std::string> reid_labels;
  for (int i = 1; i <= 9; ++i) reid_labels.push_back("r" + std::to_string(i));
  Matroid expected = reid.relabel(reid_labels).direct_sum(dow_r3);
  REQUIRE_OR_FAIL(big == expected, "direct-sum structure");
  REQUIRE_OR_FAIL(big.num_bases() == 172569, "basis count 69 * 2501");

  // The finite-algebra reading is the same geometry as the skew-field one.
  auto witness = dow_r3.is_isomorphic(dow_h);
  REQUIRE_OR_FAIL(witness.has_value(), "group geometries not isomorphic");
  out << "36 elements, 172569 bases, both geometry readings isomorphic";
}

// --------------------------------------------------------------------------
// 3. Duality across the whole catalog.
// --------------------------------------------------------------------------
void criterion3(Shared& sh, std::ostringstream& out) {
  struct Item {
    const ChainGroupRep* rep;
    const Matroid* primal;
  };
  Matroid skew_m = matroid_of(sh.skew);
  Matroid reid_m = matroid_of(sh.reid);
  Matroid dow_h_m = matroid_of(sh.dowling_h);
  Matroid dow_r3_m = matroid_of(sh.dowling_r3);
  Matroid u26_m = matroid_of(sh.u26);
  Matroid u23_m = matroid_of(sh.u23);
  Matroid dy_m = matroid_of(sh.dyadic);
  Matroid dy5_m = matroid_of(sh.dyadic_gf5);
  Matroid k4_m = matroid_of(sh.k4);
  std::vector<Item> items = {{&sh.u23, &u23_m},
                             {&sh.skew, &skew_m},
                             {&sh.m2q, &sh.m2q_matroid},
                             {&sh.reid, &reid_m},
                             {&sh.dowling_h, &dow_h_m},
                             {&sh.dowling_r3, &dow_r3_m},
                             {&sh.counterexample, &sh.counterexample_matroid},
                             {&sh.u26, &u26_m},
                             {&sh.dyadic, &dy_m},
                             {&sh.dyadic_gf5, &dy5_m},
                             {&sh.k4, &k4_m}};
  size_t checked = 0;
  for (const auto& item : items) {
    ChainGroupRep strong = to_strong(*item.rep);
    ChainGroupRep dual = dual_rep(strong);
    Matroid md = matroid_of(dual);
    REQUIRE_OR_FAIL(md == item.primal->dual(),
                    "dual bases are not the complements");
    Matroid mdd = matroid_of(dual_rep(dual));
    REQUIRE_OR_FAIL(mdd == *item.primal, "double dual changed the matroid");
    ++checked;
  }
  out << checked << " representations dualize exactly";
}

// --------------------------------------------------------------------------
// 4. Minors commute with the matroid operations.
// --------------------------------------------------------------------------
void criterion4(Shared& sh, std::ostringstream& out) {
  std::mt19937_64 rng(20260810);
  struct Source {
    const ChainGroupRep* rep;
    const Matroid* matroid;
  };
  Matroid skew_m = matroid_of(sh.skew);
  Matroid reid_m = matroid_of(sh.reid);
  Matroid u26_m = matroid_of(sh.u26);
  Matroid u23_m = matroid_of(sh.u23);
  Matroid dy_m = matroid_of(sh.dyadic);
  Matroid k4_m = matroid_of(sh.k4);
  Matroid dow_r3_m = matroid_of(sh.dowling_r3);
  std::vector<Source> sources = {
      {&sh.u23, &u23_m},   {&sh.skew, &skew_m}, {&sh.m2q, &sh.m2q_matroid},
      {&sh.reid, &reid_m}, {&sh.u26, &u26_m},   {&sh.dyadic, &dy_m},
      {&sh.k4, &k4_m},     {&sh.dowling_r3, &dow_r3_m}};
  int done = 0;
  while (done < 98) {
    const Source& s = sources[done % sources.size()];
    const auto& ground = s.matroid->ground();
    std::uniform_int_distribution<size_t> pick(0, ground.size() - 1);
    std::string e = ground[pick(rng)];
    bool contract = (done & 1) != 0;
    ChainGroupRep rep_minor =
        contract ? minor(*s.rep, {}, {e}) : minor(*s.rep, {e}, {});
    Matroid expected =
        contract ? s.matroid->contraction(e) : s.matroid->deletion(e);
    REQUIRE_OR_FAIL(matroid_of(rep_minor) == expected,
                    "representation minor disagrees with the matroid minor");
    ++done;
  }
  // Two single-element minors of the large direct sum.
  for (const std::string e : {std::string("r5"), std::string("a3")}) {
    bool contract = e == "a3";
    ChainGroupRep rep_minor = contract ? minor(sh.counterexample, {}, {e})
                                       : minor(sh.counterexample, {e}, {});
    Matroid expected = contract ? sh.counterexample_matroid.contraction(e)
                                : sh.counterexample_matroid.deletion(e);
    REQUIRE_OR_FAIL(matroid_of(rep_minor) == expected,
                    "large-instance minor disagrees");
    ++done;
  }
  out << done << " random single-element minors commute";
}

// --------------------------------------------------------------------------
// 5. The Tutte criterion.
// --------------------------------------------------------------------------
void criterion5(Shared&, std::ostringstream& out) {
  auto u23 = catalog::get("u23-chains").chains.value();
  TutteResult r1 = tutte_check(u23.matroid, u23.chains, u23.pf);
  REQUIRE_OR_FAIL(r1.ok, "triangle chains should balance");

  auto np = catalog::get("nonpappus-chains").chains.value();
  TutteResult r2 = tutte_check(np.matroid, np.chains, np.pf);
  REQUIRE_OR_FAIL(r2.ok, "nine-point chains should balance");

  auto bad = catalog::get("u23-chains-perturbed").chains.value();
  TutteResult r3 = tutte_check(bad.matroid, bad.chains, bad.pf);
  REQUIRE_OR_FAIL(!r3.ok, "perturbed chains should fail");
  REQUIRE_OR_FAIL(r3.failure.has_value(), "failure must carry the triple");
  out << np.chains.size() << " nine-point cocircuit chains balance on "
      << r2.certificates.size()
      << " modular triples; perturbed set reports a failing triple";
}

// --------------------------------------------------------------------------
// 6. The subset expansion identity on random quaternion matrices.
// --------------------------------------------------------------------------
void criterion6(Shared&, std::ostringstream& out) {
  std::mt19937_64 rng(6);
  auto H = Ring::quaternion(BaseField::rationals());
  std::uniform_int_distribution<int> rdist(1, 3);
  int done = 0;
  while (done < 100) {
    int r = rdist(rng);
    std::uniform_int_distribution<int> sdist(r, 6);
    int s = sdist(rng);
    RMatrix a = testutil::random_matrix(rng, H, testutil::labels("x", r),
                                        testutil::labels("y", s), 10, 10);
    auto rep = cauchy_binet_check(a);
    REQUIRE_OR_FAIL(rep.equal, "identity failed on a random matrix");
    ++done;
  }
  out << done << " random matrices satisfy the identity exactly";
}

// --------------------------------------------------------------------------
// 7. Basis counting against brute-force enumeration.
// --------------------------------------------------------------------------
void criterion7(Shared& sh, std::ostringstream& out) {
  REQUIRE_OR_FAIL(count_bases(sh.u26) == 15, "six-point line count");
  REQUIRE_OR_FAIL(matroid_of(sh.u26).num_bases() == 15,
                  "six-point line enumeration");
  struct Case {
    GraphDoc g;
    uint64_t expect;
  };
  std::vector<Case> cases = {{complete_graph(4), 16},
                             {complete_graph(5), 125},
                             {complete_bipartite(3, 3), 81}};
  for (const auto& c : cases) {
    uint64_t oracle = testutil::oracle_spanning_trees(c.g.vertices, c.g.edges);
    REQUIRE_OR_FAIL(oracle == c.expect, "tree oracle mismatch");
    mpz_class counted = count_bases(graph_to_qu(c.g));
    REQUIRE_OR_FAIL(counted == mpz_class(static_cast<unsigned long>(c.expect)),
                    "pseudo-determinant count mismatch");
  }
  out << "15 / 16 / 125 / 81 bases, all matching enumeration";
}

// --------------------------------------------------------------------------
// 8. Marginals of the projection matrix.
// --------------------------------------------------------------------------
void criterion8(Shared& sh, std::ostringstream& out) {
  const BaseField& fq = BaseField::rationals();
  Matroid k4_m = matroid_of(sh.k4);
  Matroid u26_m = matroid_of(sh.u26);
  struct Pair {
    const ChainGroupRep* rep;
    const Matroid* m;
  };
  for (const Pair& inst : {Pair{&sh.k4, &k4_m}, Pair{&sh.u26, &u26_m}}) {
    const BaseField& f = inst.rep->mat.ring()->base();
    REQUIRE_OR_FAIL(f.eq(marginal(*inst.rep, {}), f.one()),
                    "empty-set marginal must be one");
    const auto& ground = inst.m->ground();
    for (size_t a = 0; a < ground.size(); ++a) {
      for (size_t b = a; b < ground.size(); ++b) {
        std::vector<std::string> fs = {ground[a]};
        if (b != a) fs.push_back(ground[b]);
        uint64_t fm = inst.m->mask_of(fs);
        size_t super = 0;
        for (uint64_t bb : inst.m->bases()) super += (bb & fm) == fm;
        FVal expect = f.from_rational(mpq_class(
            static_cast<long>(super), static_cast<long>(inst.m->num_bases())));
        REQUIRE_OR_FAIL(f.eq(marginal(*inst.rep, fs), expect),
                        "marginal disagrees with enumeration");
      }
    }
  }
  // Loop boundary case: a self-loop edge has marginal zero.
  GraphDoc looped = complete_graph(4);
  looped.edges.push_back({2, 2});
  ChainGroupRep lrep = graph_to_qu(looped);
  REQUIRE_OR_FAIL(fq.eq(marginal(lrep, {"e7"}), fq.zero()),
                  "loop marginal must be zero");
  out << "all marginals with |F| <= 2 match enumeration, boundaries included";
}

// --------------------------------------------------------------------------
// 9. The pseudo-determinant laws.
// --------------------------------------------------------------------------
void criterion9(Shared&, std::ostringstream& out) {
  std::mt19937_64 rng(9);
  auto H = Ring::quaternion(BaseField::rationals());
  const BaseField& f = H->base();
  std::uniform_int_distribution<int> rdist(1, 4);
  int rounds = 0;
  for (int t = 0; t < 120; ++t) {
    int r = rdist(rng);
    auto lbl = testutil::labels("x", r);
    RMatrix a = testutil::random_matrix(rng, H, lbl, lbl, 3, 3);
    RMatrix b = testutil::random_matrix(rng, H, lbl, lbl, 3, 3);
    REQUIRE_OR_FAIL(f.eq(delta_sq(a * b), f.mul(delta_sq(a), delta_sq(b))),
                    "multiplicativity");
    REQUIRE_OR_FAIL(f.eq(delta_sq(a.conj_transpose()), delta_sq(a)),
                    "conjugate transpose");
    RElem q = testutil::random_elem(rng, H);
    REQUIRE_OR_FAIL(
        f.eq(delta_sq(RMatrix::from_rows(H, {"0"}, {"0"}, {{q}})), q.norm_sq()),
        "single entry");
    if (r >= 2) {
      RMatrix blocked = RMatrix::build(H, lbl, lbl, [&](size_t i, size_t j) {
        if (j + 1 == static_cast<size_t>(r) &&
            i + 1 < static_cast<size_t>(r)) {
          return H->zero();
        }
        return a.at(i, j);
      });
      std::vector<std::string> head(lbl.begin(), lbl.end() - 1);
      REQUIRE_OR_FAIL(
          f.eq(delta_sq(blocked),
               f.mul(blocked.at(r - 1, r - 1).norm_sq(),
                     delta_sq(blocked.submatrix(head, head)))),
          "block expansion");
    }
    std::vector<size_t> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RMatrix pm = RMatrix::build(H, lbl, lbl, [&](size_t i, size_t j) {
      return perm[i] == j ? H->one() : H->zero();
    });
    REQUIRE_OR_FAIL(f.eq(delta_sq(pm), f.one()), "permutation");
    if (r >= 2) {
      std::uniform_int_distribution<size_t> pick(0, r - 1);
      size_t i = pick(rng), j = pick(rng);
      if (i != j) {
        RElem v = testutil::random_elem(rng, H);
        RMatrix tv = RMatrix::build(H, lbl, lbl, [&](size_t x2, size_t y2) {
          if (x2 == y2) return H->one();
          if (x2 == i && y2 == j) return v;
          return H->zero();
        });
        REQUIRE_OR_FAIL(f.eq(delta_sq(tv), f.one()), "transvection");
      }
    }
    if (!a.at(0, 0).is_zero()) {
      RMatrix piv = a.pivot(lbl[0], lbl[0]);
      std::vector<std::string> rest(lbl.begin() + 1, lbl.end());
      REQUIRE_OR_FAIL(
          f.eq(delta_sq(a), f.mul(a.at(0, 0).norm_sq(),
                                  delta_sq(piv.submatrix(rest, rest)))),
          "pivot corollary");
    }
    ++rounds;
  }
  out << rounds
      << " randomized rounds across all six laws and the pivot corollary";
}

// --------------------------------------------------------------------------
// 10. Homomorphism preservation.
// --------------------------------------------------------------------------
void criterion10(Shared& sh, std::ostringstream& out) {
  ChainGroupRep image = apply_hom(sh.dyadic, gfp_hom(5), gfp_target(5));
  Matroid source = matroid_of(sh.dyadic);
  Matroid mapped = matroid_of(image);
  REQUIRE_OR_FAIL(source == mapped, "the GF(5) image changed the bases");
  REQUIRE_OR_FAIL(image.mat == sh.dyadic_gf5.mat,
                  "image disagrees with the frozen entry");
  REQUIRE_OR_FAIL(matroid_of(sh.dyadic_gf5) == source,
                  "frozen image changed the bases");
  out << "dyadic matrix and its GF(5) image share all " << source.num_bases()
      << " bases";
}

// --------------------------------------------------------------------------
// 11. Algebraic identity suite.
// --------------------------------------------------------------------------
void criterion11(Shared& sh, std::ostringstream& out) {
  std::mt19937_64 rng(11);
  auto H = Ring::quaternion(BaseField::rationals());
  auto M2 = Ring::matrix_ring(2, BaseField::rationals());

  for (int t = 0; t < 150; ++t) {
    RElem p = testutil::random_elem(rng, H), q = testutil::random_elem(rng, H);
    REQUIRE_OR_FAIL(phi_elem(p * q) == phi_elem(p) * phi_elem(q), "phi mul");
    REQUIRE_OR_FAIL(phi_elem(p + q) == phi_elem(p) + phi_elem(q), "phi add");
    REQUIRE_OR_FAIL(phi_elem(p.conj()) == phi_elem(p).conj(), "phi conj");
  }

  for (int t = 0; t < 120; ++t) {
    RMatrix a = testutil::random_matrix(rng, M2, testutil::labels("r", 2),
                                        testutil::labels("s", 3));
    RMatrix b = testutil::random_matrix(rng, M2, testutil::labels("r", 2),
                                        testutil::labels("s", 3));
    RMatrix c = testutil::random_matrix(rng, M2, testutil::labels("s", 3),
                                        testutil::labels("t", 2));
    REQUIRE_OR_FAIL((a + b).unwrap() == a.unwrap() + b.unwrap(), "unwrap add");
    REQUIRE_OR_FAIL((a * c).unwrap() == a.unwrap() * c.unwrap(), "unwrap mul");
    RMatrix sq = testutil::random_matrix(rng, M2, testutil::labels("r", 2),
                                         testutil::labels("s", 2));
    REQUIRE_OR_FAIL(sq.try_invert().has_value() == (sq.unwrap().rank() == 4),
                    "unwrap invertibility");
  }

  for (const RingPtr& R :
       {Ring::rationals(), H, RingPtr(Ring::gf3_quaternion())}) {
    int done = 0;
    while (done < 100) {
      RMatrix a = testutil::random_matrix(rng, R, testutil::labels("x", 3),
                                          testutil::labels("y", 3));
      if (!is_unit(a.at(2, 0))) continue;
      REQUIRE_OR_FAIL(a.pivot("x3", "y1").pivot("y1", "x3") == a,
                      "pivot involution");
      ++done;
    }
  }

  RMatrix P = projection(sh.k4).P;
  REQUIRE_OR_FAIL(P * P == P, "projection idempotence");
  REQUIRE_OR_FAIL(P.conj_transpose() == P, "projection symmetry");
  for (int t = 0; t < 100; ++t) {
    RMatrix F = testutil::random_invertible(rng, sh.k4.mat.ring(),
                                            sh.k4.mat.row_labels());
    ChainGroupRep moved = make_weak_rep(sh.k4.pf, F * sh.k4.mat);
    REQUIRE_OR_FAIL(projection(moved).P == P, "projection invariance");
  }
  Matroid k4_m = matroid_of(sh.k4);
  int contractions = 0;
  for (const auto& e : k4_m.ground()) {
    if (k4_m.loops() & (uint64_t{1} << k4_m.index_of(e))) continue;
    ChainGroupRep contracted = minor(sh.k4, {}, {e});
    std::vector<std::string> rest;
    for (const auto& c : sh.k4.mat.col_labels()) {
      if (c != e) rest.push_back(c);
    }
    REQUIRE_OR_FAIL(
        P.pivot(e, e).submatrix(rest, rest) == projection(contracted).P,
        "contraction-pivot identity");
    ++contractions;
  }
  out << "phi, block-expansion, pivot, and projection laws verified ("
      << contractions << " contractions)";
}

}  // namespace

int main() {
  std::cout << "acceptance suite: exact chain-group toolkit" << std::endl;
  Shared sh;
  run({1, "nine-point configuration pipeline", 10},
      [&](auto& out) { criterion1(sh, out); });
  run({2, "direct-sum counterexample over GF(3)[i,j,k]", 60},
      [&](auto& out) { criterion2(sh, out); });
  run({3, "duality across the catalog", 10},
      [&](auto& out) { criterion3(sh, out); });
  run({4, "minors commute with matroid minors", 0},
      [&](auto& out) { criterion4(sh, out); });
  run({5, "Tutte criterion", 0}, [&](auto& out) { criterion5(sh, out); });
  run({6, "subset expansion identity", 30},
      [&](auto& out) { criterion6(sh, out); });
  run({7, "basis counting", 30}, [&](auto& out) { criterion7(sh, out); });
  run({8, "projection marginals", 0}, [&](auto& out) { criterion8(sh, out); });
  run({9, "pseudo-determinant laws", 0},
      [&](auto& out) { criterion9(sh, out); });
  run({10, "homomorphism preservation", 0},
      [&](auto& out) { criterion10(sh, out); });
  run({11, "algebraic identity suite", 0},
      [&](auto& out) { criterion11(sh, out); });
  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
