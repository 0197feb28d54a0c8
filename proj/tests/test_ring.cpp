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

#include "pfmatroid/matrix.hpp"
#include "pfmatroid/ring.hpp"
#include "test_util.hpp"

using namespace pfm;
using testutil::random_elem;

namespace {

RElem qi(const RingPtr& r) {
  const BaseField& f = r->base();
  return r->quaternion_elem(f.zero(), f.one(), f.zero(), f.zero());
}
RElem qj(const RingPtr& r) {
  const BaseField& f = r->base();
  return r->quaternion_elem(f.zero(), f.zero(), f.one(), f.zero());
}
RElem qk(const RingPtr& r) {
  const BaseField& f = r->base();
  return r->quaternion_elem(f.zero(), f.zero(), f.zero(), f.one());
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
  auto H = Ring::quaternion(BaseField::rationals());
  RElem i = qi(H), j = qj(H), k = qk(H), one = H->one();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j * k == -one);
}

TEST_CASE("ring axioms hold exactly on random triples") {
  std::mt19937_64 rng(101);
  std::vector<RingPtr> rings = {
      Ring::rationals(),
      Ring::dyadic(),
      Ring::quaternion(BaseField::rationals()),
      Ring::quaternion(BaseField::quadratic(5)),
      Ring::matrix_ring(2, BaseField::rationals()),
      Ring::gf3_quaternion(),
      Ring::field(BaseField::gf(7)),
  };
  for (const auto& R : rings) {
    RElem one = R->one();
    for (int t = 0; t < 1000; ++t) {
      RElem a = R->kind() == RingKind::kDyadic
                    ? R->from_scalar(R->base().from_rational(
                          mpq_class(t % 17 - 8, 1 << (t % 4))))
                    : random_elem(rng, R);
      RElem b = R->kind() == RingKind::kDyadic
                    ? R->from_scalar(R->base().from_rational(
                          mpq_class(t % 13 - 6, 1 << (t % 3))))
                    : random_elem(rng, R);
      RElem c = R->kind() == RingKind::kDyadic
                    ? R->from_scalar(R->base().from_rational(mpq_class(t % 7 - 3)))
                    : random_elem(rng, R);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(one * a == a);
      CHECK(a * one == a);
    }
  }
}

TEST_CASE("conjugation and norms") {
  auto H = Ring::quaternion(BaseField::rationals());
  const BaseField& f = H->base();
  RElem p = H->quaternion_elem(f.one(), f.one(), f.one(), f.one());
  CHECK(p.conj() == H->quaternion_elem(f.one(), f.from_long(-1),
                                       f.from_long(-1), f.from_long(-1)));
  CHECK(f.eq(p.norm_sq(), f.from_long(4)));
  FVal half = f.from_rational(mpq_class(1, 2));
  RElem h = H->quaternion_elem(half, half, half, half);
  CHECK(f.eq(h.norm_sq(), f.one()));
  CHECK(f.eq(H->zero().norm_sq(), f.zero()));
  // norm_sq agrees with the product against the conjugate
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    RElem a = random_elem(rng, H), b = random_elem(rng, H);
    CHECK((a * b).conj() == b.conj() * a.conj());
    RElem n = a * a.conj();
    CHECK(n == H->from_scalar(a.norm_sq()));
  }
}

TEST_CASE("opposite rings reverse multiplication") {
  auto H = Ring::quaternion(BaseField::rationals());
  auto Ho = H->opposite();
  RElem i = qi(H), j = qj(H);
  CHECK(i.transfer_to(Ho) * j.transfer_to(Ho) == (j * i).transfer_to(Ho));
  // double opposite behaves as the original
  auto Hoo = Ho->opposite();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    RElem a = random_elem(rng, H), b = random_elem(rng, H);
    CHECK(a.transfer_to(Hoo) * b.transfer_to(Hoo) == (a * b).transfer_to(Hoo));
    CHECK(a.transfer_to(Ho) * b.transfer_to(Ho) == (b * a).transfer_to(Ho));
  }
  // commutative carriers are unaffected
  auto Q = Ring::rationals();
  auto Qo = Q->opposite();
  for (int t = 0; t < 50; ++t) {
    RElem a = random_elem(rng, Q), b = random_elem(rng, Q);
    CHECK(a.transfer_to(Qo) * b.transfer_to(Qo) == (a * b).transfer_to(Qo));
  }
}

TEST_CASE("matrix ring blocks multiply blockwise") {
  auto M2 = Ring::matrix_ring(2, BaseField::rationals());
  const BaseField& f = M2->base();
  auto blk = [&](long a, long b, long c, long d) {
    return M2->from_coords(
        {f.from_long(a), f.from_long(b), f.from_long(c), f.from_long(d)});
  };
  // E(1,2) * E(2,1) = E(1,1), E(2,1) * E(2,1) = 0
  CHECK(blk(0, 1, 0, 0) * blk(0, 0, 1, 0) == blk(1, 0, 0, 0));
  CHECK((blk(0, 0, 1, 0) * blk(0, 0, 1, 0)).is_zero());
  CHECK(blk(2, 2, 0, 2) * blk(3, 0, -3, 3) == blk(0, 6, -6, 6));
  CHECK(blk(3, 0, -3, 3) * blk(2, 2, 0, 2) == blk(6, 6, -6, 0));
}

TEST_CASE("the 81-element quaternion algebra") {
  auto R3 = Ring::gf3_quaternion();
  const BaseField& f = R3->base();
  RElem x = R3->quaternion_elem(f.one(), f.one(), f.one(), f.zero());
  RElem y = R3->quaternion_elem(f.one(), f.from_long(-1), f.from_long(-1),
                                f.zero());
  CHECK((x * y).is_zero());  // zero divisors exist

  // Exhaustive: each element is exactly one of zero, a unit, a zero divisor.
  size_t units = 0, zero_divisors = 0, zeros = 0;
  std::vector<RElem> all;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          all.push_back(R3->quaternion_elem(f.from_long(a), f.from_long(b),
                                            f.from_long(c), f.from_long(d)));
        }
      }
    }
  }
  REQUIRE(all.size() == 81);
  for (const auto& v : all) {
    bool unit = is_unit(v);
    bool zero = v.is_zero();
    bool zdiv = false;
    if (!zero && !unit) {
      for (const auto& w : all) {
        if (!w.is_zero() && (v * w).is_zero()) {
          zdiv = true;
          break;
        }
      }
    }
    CHECK(((zero && !unit && !zdiv) || (!zero && unit && !zdiv) ||
           (!zero && !unit && zdiv)));
    zeros += zero;
    units += unit;
    zero_divisors += zdiv;
  }
  CHECK(zeros == 1);
  CHECK(units + zero_divisors == 80);
  CHECK(!is_unit(x));  // 1+i+j is one of the zero divisors
}

TEST_CASE("dyadic carrier enforces its denominator invariant") {
  auto D = Ring::dyadic();
  CHECK_NOTHROW(D->from_scalar(D->base().from_rational(mpq_class(3, 8))));
  CHECK_THROWS_AS(D->from_scalar(D->base().from_rational(mpq_class(1, 3))),
                  DomainError);
  // 2 is a unit of the subring, 3 is not
  CHECK(is_unit(D->from_long(2)));
  CHECK(!is_unit(D->from_long(3)));
  CHECK(inverse_of(D->from_long(-4)) ==
        D->from_scalar(D->base().from_rational(mpq_class(-1, 4))));
}

TEST_CASE("element inverses agree with the regular representation route") {
  std::mt19937_64 rng(23);
  std::vector<RingPtr> rings = {
      Ring::rationals(),
      Ring::quaternion(BaseField::rationals()),
      Ring::quaternion(BaseField::quadratic(5)),
      Ring::matrix_ring(2, BaseField::rationals()),
      Ring::gf3_quaternion(),
      Ring::field(BaseField::gf(5)),
      Ring::quaternion(BaseField::rationals())->opposite(),
  };
  for (const auto& R : rings) {
    for (int t = 0; t < 200; ++t) {
      RElem a = random_elem(rng, R);
      auto fast = try_inverse(a);
      auto slow = try_inverse_regular(a);
      CHECK(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(*fast == *slow);
        CHECK(a * *fast == R->one());
        CHECK(*fast * a == R->one());
      }
    }
  }
}
