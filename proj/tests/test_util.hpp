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

#ifndef PFMATROID_TESTS_TEST_UTIL_HPP
#define PFMATROID_TESTS_TEST_UTIL_HPP

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "pfmatroid/matrix.hpp"
#include "pfmatroid/quat.hpp"
#include "pfmatroid/ring.hpp"

namespace testutil {

using pfm::BaseField;
using pfm::FVal;
using pfm::RElem;
using pfm::Ring;
using pfm::RingPtr;
using pfm::RMatrix;

// ---------------------------------------------------------------------------
// Independent oracles. These live entirely in test code and use their own
// arithmetic, so they do not share a code path with the library routines
// they check.
// ---------------------------------------------------------------------------

// Rank of a dense rational matrix by plain elimination on mpq values.
inline size_t oracle_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const size_t nr = m.size(), nc = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < nc && rank < nr; ++col) {
    size_t piv = rank;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[piv], m[rank]);
    for (size_t i = rank + 1; i < nr; ++i) {
      if (m[i][col] == 0) continue;
      mpq_class f = m[i][col] / m[rank][col];
      for (size_t j = col; j < nc; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Plain quaternion 4-tuples over mpq, with their own multiplication.
struct Q4 {
  mpq_class a, b, c, d;

  Q4 operator*(const Q4& o) const {
    return Q4{a * o.a - b * o.b - c * o.c - d * o.d,
              a * o.b + b * o.a + c * o.d - d * o.c,
              a * o.c - b * o.d + c * o.a + d * o.b,
              a * o.d + b * o.c - c * o.b + d * o.a};
  }
  Q4 operator-(const Q4& o) const { return Q4{a - o.a, b - o.b, c - o.c, d - o.d}; }
  bool zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  mpq_class norm() const { return a * a + b * b + c * c + d * d; }
  Q4 conj() const { return Q4{a, -b, -c, -d}; }
  Q4 inv() const {
    mpq_class n = norm();
    return Q4{a / n, -b / n, -c / n, -d / n};
  }
};

// Invertibility of a 2x2 quaternion matrix by the division-ring Schur
// complement: [[p, q], [r, s]] is invertible iff some row reduction leaves a
// nonzero corner.
inline bool oracle_q2_invertible(const Q4& p, const Q4& q, const Q4& r,
                                 const Q4& s) {
  if (!p.zero()) return !(s - r * p.inv() * q).zero();
  if (!q.zero()) return !(r - s * q.inv() * p).zero();
  return false;  // first row is zero
}

inline Q4 to_q4(const RElem& x) {
  return Q4{x.coord(0).c[0], x.coord(1).c[0], x.coord(2).c[0], x.coord(3).c[0]};
}

// Spanning-tree count by exhaustive enumeration with union-find.
inline uint64_t oracle_spanning_trees(
    unsigned vertices, const std::vector<std::pair<unsigned, unsigned>>& edges) {
  const size_t m = edges.size();
  // count connected components to know forest size
  std::vector<unsigned> base(vertices + 1);
  auto find = [](std::vector<unsigned>& p, unsigned x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (unsigned v = 0; v <= vertices; ++v) base[v] = v;
  for (auto [u, v] : edges) base[find(base, u)] = find(base, v);
  unsigned comps = 0;
  for (unsigned v = 1; v <= vertices; ++v) {
    if (find(base, v) == v) ++comps;
  }
  const unsigned want = vertices - comps;
  uint64_t count = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != want) continue;
    std::vector<unsigned> p(vertices + 1);
    for (unsigned v = 0; v <= vertices; ++v) p[v] = v;
    bool acyclic = true;
    for (size_t e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      auto [u, v] = edges[e];
      unsigned ru = find(p, u), rv = find(p, v);
      if (ru == rv) {
        acyclic = false;
      } else {
        p[ru] = rv;
      }
    }
    if (acyclic) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Random generators (deterministic seeds chosen per test site).
// ---------------------------------------------------------------------------

inline mpq_class random_rational(std::mt19937_64& rng, long max_abs = 5,
                                 long max_den = 4) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_den);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

inline RElem random_elem(std::mt19937_64& rng, const RingPtr& ring,
                         long max_abs = 5, long max_den = 4) {
  const BaseField& f = ring->base();
  std::vector<FVal> c;
  for (unsigned t = 0; t < ring->dim(); ++t) {
    if (f.kind() == BaseField::Kind::kGFp) {
      std::uniform_int_distribution<long> u(0, f.modulus() - 1);
      c.push_back(f.from_long(u(rng)));
    } else {
      FVal v = f.from_rational(random_rational(rng, max_abs, max_den));
      if (f.sqrt_param() != 0) {
        v = f.add(v, f.mul(f.sqrt_generator(),
                           f.from_rational(random_rational(rng, 2, 2))));
      }
      c.push_back(v);
    }
  }
  return ring->from_coords(std::move(c));
}

// Unit-norm quaternions: products drawn from a pool of exactly-unit values.
inline RElem random_unit_quaternion(std::mt19937_64& rng, const RingPtr& ring) {
  const BaseField& f = ring->base();
  auto qe = [&](long a, long b, long c, long d, long den) {
    return ring->quaternion_elem(
        f.from_rational(mpq_class(a, den)), f.from_rational(mpq_class(b, den)),
        f.from_rational(mpq_class(c, den)), f.from_rational(mpq_class(d, den)));
  };
  const std::vector<RElem> pool = {
      qe(1, 0, 0, 0, 1),  qe(-1, 0, 0, 0, 1), qe(0, 1, 0, 0, 1),
      qe(0, 0, 1, 0, 1),  qe(0, 0, 0, 1, 1),  qe(1, 1, 1, 1, 2),
      qe(1, -1, 1, -1, 2), qe(3, 4, 0, 0, 5), qe(0, 3, 4, 0, 5),
      qe(1, 2, 2, 4, 5),  qe(2, 3, 6, 0, 7)};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  RElem out = pool[pick(rng)];
  for (int i = 0; i < 3; ++i) out = out * pool[pick(rng)];
  return out;
}

inline RMatrix random_matrix(std::mt19937_64& rng, const RingPtr& ring,
                             const std::vector<std::string>& rows,
                             const std::vector<std::string>& cols,
                             long max_abs = 3, long max_den = 3) {
  return RMatrix::build(ring, rows, cols, [&](size_t, size_t) {
    return random_elem(rng, ring, max_abs, max_den);
  });
}

// An invertible square matrix: product of unit-diagonal and transvections.
inline RMatrix random_invertible(std::mt19937_64& rng, const RingPtr& ring,
                                 const std::vector<std::string>& labels) {
  const size_t n = labels.size();
  RMatrix acc = RMatrix::identity(ring, labels);
  std::uniform_int_distribution<size_t> idx(0, n - 1);
  for (int step = 0; step < 6; ++step) {
    size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    RMatrix t = RMatrix::build(ring, labels, labels, [&](size_t a, size_t b) {
      if (a == b) return ring->one();
      if (a == i && b == j) return random_elem(rng, ring, 2, 2);
      return ring->zero();
    });
    acc = acc * t;
  }
  return acc;
}

inline std::vector<std::string> labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace testutil

#endif  // PFMATROID_TESTS_TEST_UTIL_HPP
