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

#include <doctest.h>

#include "pfmatroid/catalog.hpp"
#include "pfmatroid/quat.hpp"
#include "test_util.hpp"

using namespace pfm;
using testutil::labels;
using testutil::random_elem;
using testutil::random_matrix;

namespace {

RingPtr H() { return Ring::quaternion(BaseField::rationals()); }

RElem unit(const char* which) {
  auto r = H();
  const BaseField& f = r->base();
  std::string s(which);
  if (s == "i") return r->quaternion_elem(f.zero(), f.one(), f.zero(), f.zero());
  if (s == "j") return r->quaternion_elem(f.zero(), f.zero(), f.one(), f.zero());
  return r->quaternion_elem(f.zero(), f.zero(), f.zero(), f.one());
}

}  // namespace

TEST_CASE("phi embedding") {
  auto r = H();
  BaseField cf = r->base().complexified();
  SUBCASE("phi(1) is the identity block") {
    CHECK(phi_elem(r->one()) == Ring::matrix_ring(2, cf)->one());
  }
  SUBCASE("phi(i) is diag(i, -i)") {
    RElem img = phi_elem(unit("i"));
    FVal i = cf.make_imaginary_unit();
    auto M = Ring::matrix_ring(2, cf);
    CHECK(img == M->from_coords({i, cf.zero(), cf.zero(), cf.neg(i)}));
  }
  SUBCASE("ring homomorphism and conjugation laws") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 1000; ++t) {
      RElem p = random_elem(rng, r), q = random_elem(rng, r);
      CHECK(phi_elem(p * q) == phi_elem(p) * phi_elem(q));
      CHECK(phi_elem(p + q) == phi_elem(p) + phi_elem(q));
      CHECK(phi_elem(p.conj()) == phi_elem(p).conj());
    }
  }
}

TEST_CASE("pseudo-determinant basics") {
  auto r = H();
  const BaseField& f = r->base();
  SUBCASE("a single entry contributes its norm") {
    std::mt19937_64 rng(127);
    for (int t = 0; t < 200; ++t) {
      RElem a = random_elem(rng, r);
      RMatrix m = RMatrix::from_rows(r, {"0"}, {"0"}, {{a}});
      CHECK(f.eq(delta_sq(m), a.norm_sq()));
    }
    const BaseField& ff = f;
    RElem p = r->quaternion_elem(ff.one(), ff.one(), ff.one(), ff.one());
    CHECK(f.eq(delta(RMatrix::from_rows(r, {"0"}, {"0"}, {{p}})),
               f.from_long(2)));
  }
  SUBCASE("identity and empty matrices") {
    CHECK(f.eq(delta(RMatrix::identity(r, labels("e", 3))), f.one()));
    CHECK(f.eq(delta_sq(RMatrix::zero(r, {}, {})), f.one()));
  }
  SUBCASE("irrational values are refused by delta but exact as squares") {
    RElem z = r->one() + unit("i");  // norm 2
    RMatrix m = RMatrix::from_rows(r, {"0"}, {"0"}, {{z}});
    CHECK(f.eq(delta_sq(m), f.from_long(2)));
    CHECK_THROWS_AS(delta(m), NotPerfectSquareError);
  }
}

TEST_CASE("pseudo-determinant laws on random matrices") {
  auto r = H();
  const BaseField& f = r->base();
  std::mt19937_64 rng(131);
  for (int size = 1; size <= 4; ++size) {
    auto lbl = labels("x", size);
    for (int t = 0; t < 30; ++t) {
      RMatrix a = random_matrix(rng, r, lbl, lbl, 2, 2);
      RMatrix b = random_matrix(rng, r, lbl, lbl, 2, 2);
      // multiplicativity, conjugate transpose, as squares
      CHECK(f.eq(delta_sq(a * b), f.mul(delta_sq(a), delta_sq(b))));
      CHECK(f.eq(delta_sq(a.conj_transpose()), delta_sq(a)));
    }
    // permutation and transvection matrices have delta 1
    for (int t = 0; t < 10; ++t) {
      std::vector<size_t> perm(size);
      for (int i = 0; i < size; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      RMatrix p = RMatrix::build(r, lbl, lbl, [&](size_t i, size_t j) {
        return perm[i] == j ? r->one() : r->zero();
      });
      CHECK(f.eq(delta_sq(p), f.one()));
      if (size >= 2) {
        std::uniform_int_distribution<size_t> pick(0, size - 1);
        size_t i = pick(rng), j = pick(rng);
        if (i != j) {
          RElem v = random_elem(rng, r, 2, 2);
          RMatrix tv = RMatrix::build(r, lbl, lbl, [&](size_t a2, size_t b2) {
            if (a2 == b2) return r->one();
            if (a2 == i && b2 == j) return v;
            return r->zero();
          });
          CHECK(f.eq(delta_sq(tv), f.one()));
        }
      }
    }
    // block expansion: last column zero except the corner
    for (int t = 0; t < 20 && size >= 2; ++t) {
      RMatrix a = random_matrix(rng, r, lbl, lbl, 2, 2);
      RMatrix blocked = RMatrix::build(r, lbl, lbl, [&](size_t i, size_t j) {
        if (j + 1 == static_cast<size_t>(size) && i + 1 < static_cast<size_t>(size)) {
          return r->zero();
        }
        return a.at(i, j);
      });
      std::vector<std::string> head(lbl.begin(), lbl.end() - 1);
      FVal lhs = delta_sq(blocked);
      FVal rhs = f.mul(blocked.at(size - 1, size - 1).norm_sq(),
                       delta_sq(blocked.submatrix(head, head)));
      CHECK(f.eq(lhs, rhs));
    }
  }
}

TEST_CASE("pivot expansion of the pseudo-determinant") {
  auto r = H();
  const BaseField& f = r->base();
  std::mt19937_64 rng(137);
  int done = 0;
  while (done < 100) {
    RMatrix a = random_matrix(rng, r, labels("x", 3), labels("y", 3), 2, 2);
    if (a.at(1, 1).is_zero()) continue;
    RMatrix piv = a.pivot("x2", "y2");
    std::vector<std::string> rr = {"x1", "x3"}, cc = {"y1", "y3"};
    FVal lhs = delta_sq(a);
    FVal rhs = f.mul(a.at(1, 1).norm_sq(), delta_sq(piv.submatrix(rr, cc)));
    CHECK(f.eq(lhs, rhs));
    ++done;
  }
}

TEST_CASE("subset expansion identity") {
  auto r = H();
  const BaseField& f = r->base();
  SUBCASE("square matrices are a single term") {
    std::mt19937_64 rng(139);
    RMatrix a = random_matrix(rng, r, labels("x", 2), labels("y", 2));
    auto rep = cauchy_binet_check(a);
    CHECK(rep.equal);
    CHECK(rep.terms == 1);
  }
  SUBCASE("the zero matrix sums to zero") {
    RMatrix a = RMatrix::zero(r, labels("x", 2), labels("y", 4));
    auto rep = cauchy_binet_check(a);
    CHECK(rep.equal);
    CHECK(f.is_zero(rep.lhs_sq));
    CHECK(f.is_zero(rep.rhs_sum));
  }
  SUBCASE("random wide matrices satisfy the identity exactly") {
    std::mt19937_64 rng(149);
    for (int t = 0; t < 30; ++t) {
      RMatrix a = random_matrix(rng, r, labels("x", 2), labels("y", 4), 2, 2);
      CHECK(cauchy_binet_check(a).equal);
    }
  }
}

TEST_CASE("basis counting") {
  SUBCASE("the identity matrix counts one basis") {
    auto r = H();
    ChainGroupRep rep = make_strong_rep(
        PartialField::quaternionic_unimodular(BaseField::rationals()),
        RMatrix::identity(r, labels("e", 3)));
    CHECK(count_bases(rep) == 1);
  }
  SUBCASE("the six-point line has fifteen bases") {
    CHECK(count_bases(*catalog::get("u26-qu").rep) == 15);
  }
  SUBCASE("triangle graph counts its three trees") {
    GraphDoc tri{3, {{1, 2}, {2, 3}, {1, 3}}};
    CHECK(count_bases(graph_to_qu(tri)) == 3);
    CHECK(testutil::oracle_spanning_trees(3, tri.edges) == 3);
  }
  SUBCASE("a tree has exactly one spanning tree") {
    GraphDoc path{4, {{1, 2}, {2, 3}, {3, 4}}};
    CHECK(count_bases(graph_to_qu(path)) == 1);
  }
  SUBCASE("non-unimodular input is refused") {
    auto r = H();
    RMatrix bad = RMatrix::from_rows(r, {"1"}, {"1", "2"},
                                     {{r->one(), r->from_long(2)}});
    ChainGroupRep rep = make_weak_rep(
        PartialField::quaternionic_unimodular(BaseField::rationals()), bad);
    CHECK_THROWS(count_bases(rep));
  }
}

TEST_CASE("projection matrices") {
  SUBCASE("identity projects to itself") {
    auto r = H();
    ChainGroupRep rep = make_strong_rep(
        PartialField::quaternionic_unimodular(BaseField::rationals()),
        RMatrix::identity(r, labels("e", 2)));
    CHECK(projection(rep).P == RMatrix::identity(r, labels("e", 2)));
  }
  SUBCASE("hermitian, idempotent, and basis-invariant") {
    std::mt19937_64 rng(151);
    ChainGroupRep k4 = *catalog::get("k4-graphic").rep;
    RMatrix P = projection(k4).P;
    CHECK(P == P.conj_transpose());
    CHECK(P * P == P);
    for (int t = 0; t < 25; ++t) {
      RMatrix F = testutil::random_invertible(rng, k4.mat.ring(),
                                              k4.mat.row_labels());
      ChainGroupRep moved = make_weak_rep(k4.pf, F * k4.mat);
      CHECK(projection(moved).P == P);
    }
  }
  SUBCASE("contraction is a pivot of the projection matrix") {
    ChainGroupRep k4 = *catalog::get("k4-graphic").rep;
    RMatrix P = projection(k4).P;
    for (const char* e : {"e1", "e3", "e6"}) {
      ChainGroupRep contracted = minor(k4, {}, {std::string(e)});
      RMatrix Pc = projection(contracted).P;
      std::vector<std::string> rest;
      for (const auto& c : k4.mat.col_labels()) {
        if (c != e) rest.push_back(c);
      }
      RMatrix pivoted = P.pivot(e, e).submatrix(rest, rest);
      CHECK(pivoted == Pc);
    }
  }
  SUBCASE("row-rank-deficient input is refused") {
    auto r = H();
    RMatrix flat = RMatrix::from_rows(
        r, {"a", "b"}, {"1", "2"},
        {{r->one(), r->one()}, {r->one(), r->one()}});
    CHECK_THROWS_AS(
        projection(make_weak_rep(
            PartialField::quaternionic_unimodular(BaseField::rationals()),
            flat)),
        NotInvertibleError);
  }
}

TEST_CASE("marginals") {
  const BaseField& f = BaseField::rationals();
  ChainGroupRep k4 = *catalog::get("k4-graphic").rep;
  SUBCASE("empty set has marginal one") {
    CHECK(f.eq(marginal(k4, {}), f.one()));
  }
  SUBCASE("one edge of the complete graph is in half the trees") {
    CHECK(f.eq(marginal(k4, {"e1"}), f.from_rational(mpq_class(1, 2))));
  }
  SUBCASE("loops force marginal zero") {
    GraphDoc with_loop{3, {{1, 2}, {2, 3}, {1, 3}, {2, 2}}};
    ChainGroupRep rep = graph_to_qu(with_loop);
    CHECK(f.eq(marginal(rep, {"e4"}), f.zero()));
  }
  SUBCASE("u23 pair marginal is one third") {
    auto r = H();
    RMatrix embedded = catalog::get("u23").rep->mat.map_entries(
        [&](const RElem& x) { return r->from_scalar(x.coord(0)); });
    ChainGroupRep u23q = make_strong_rep(
        PartialField::quaternionic_unimodular(BaseField::rationals()),
        embedded);
    CHECK(f.eq(marginal(u23q, {"1", "2"}), f.from_rational(mpq_class(1, 3))));
  }
  SUBCASE("marginals match enumeration on all pairs") {
    Matroid m = matroid_of(k4);
    const auto& ground = m.ground();
    for (size_t a = 0; a < ground.size(); ++a) {
      for (size_t b = a; b < ground.size(); ++b) {
        std::vector<std::string> fs = {ground[a]};
        if (b != a) fs.push_back(ground[b]);
        uint64_t fm = m.mask_of(fs);
        size_t super = 0;
        for (uint64_t bb : m.bases()) super += (bb & fm) == fm;
        FVal expect = f.from_rational(
            mpq_class(static_cast<long>(super),
                      static_cast<long>(m.num_bases())));
        CHECK(f.eq(marginal(k4, fs), expect));
      }
    }
  }
}

TEST_CASE("graph incidence representations") {
  SUBCASE("empty graphs are rejected") {
    CHECK_THROWS_AS(graph_to_qu(GraphDoc{0, {}}), DomainError);
  }
  SUBCASE("edge endpoints are validated") {
    CHECK_THROWS_AS(graph_to_qu(GraphDoc{2, {{1, 5}}}), DomainError);
  }
  SUBCASE("disconnected graphs drop one row per component") {
    GraphDoc two{4, {{1, 2}, {3, 4}}};
    ChainGroupRep rep = graph_to_qu(two);
    CHECK(rep.mat.nrows() == 2);
    CHECK(count_bases(rep) == 1);
  }
  SUBCASE("the incidence matrix verifies over unit-norm quaternions") {
    CHECK(verify_rep(*catalog::get("k4-graphic").rep).ok);
  }
}

TEST_CASE("u26 pairwise distances") {
  // column slopes 0, 1, p, q, r pairwise at distance one, all unit norm
  ChainGroupRep rep = *catalog::get("u26-qu").rep;
  const RMatrix& a = rep.mat;
  const BaseField& f = a.ring()->base();
  std::vector<RElem> slopes;
  for (int c = 2; c < 6; ++c) slopes.push_back(a.at(1, c));
  for (const auto& s : slopes) CHECK(f.eq(s.norm_sq(), f.one()));
  for (size_t i = 0; i < slopes.size(); ++i) {
    for (size_t j = i + 1; j < slopes.size(); ++j) {
      CHECK(f.eq((slopes[i] - slopes[j]).norm_sq(), f.one()));
    }
  }
  // and against 0: slopes themselves have norm one (distance to zero)
}
