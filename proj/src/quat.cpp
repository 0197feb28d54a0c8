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

#include "pfmatroid/quat.hpp"

#include <numeric>

namespace pfm {

namespace {

void require_quaternion_matrix(const RMatrix& a) {
  if (a.ring()->kind() != RingKind::kQuaternion) {
    throw DomainError("operation requires a quaternion matrix");
  }
}

// re + im*i as a value of the complexified field.
FVal complexify(const FVal& re, const FVal& im) {
  FVal out;
  out.c[0] = re.c[0];
  out.c[1] = re.c[1];
  out.c[2] = im.c[0];
  out.c[3] = im.c[1];
  return out;
}

}  // namespace

RElem phi_elem(const RElem& q) {
  if (q.ring()->kind() != RingKind::kQuaternion) {
    throw DomainError("phi applies to quaternions");
  }
  const BaseField& F = q.ring()->base();
  BaseField cf = F.complexified();
  auto target = Ring::matrix_ring(2, cf);
  const FVal& a = q.coord(0);
  const FVal& b = q.coord(1);
  const FVal& c = q.coord(2);
  const FVal& d = q.coord(3);
  std::vector<FVal> coords{complexify(a, b), complexify(c, d),
                           complexify(F.neg(c), d), complexify(a, F.neg(b))};
  return target->from_coords(std::move(coords));
}

RMatrix phi_matrix(const RMatrix& A) {
  require_quaternion_matrix(A);
  return A.map_entries([](const RElem& x) { return phi_elem(x); });
}

std::function<RElem(const RElem&)> phi_hom() {
  return [](const RElem& x) { return phi_elem(x); };
}

PartialField phi_target(const BaseField& quaternion_base) {
  return PartialField::matrix_partial_field(2, quaternion_base.complexified());
}

FVal delta_sq(const RMatrix& D) {
  require_quaternion_matrix(D);
  if (D.nrows() != D.ncols()) {
    throw DomainError("pseudo-determinant of a non-square matrix");
  }
  const BaseField& F = D.ring()->base();
  if (D.nrows() == 0) return F.one();
  BaseField cf = F.complexified();
  FVal det = phi_matrix(D).unwrap().det();
  FVal nrm = cf.mul(det, cf.conj_im(det));
  if (!cf.is_real(nrm)) {
    throw DomainError("internal: |det|^2 came out non-real");
  }
  // nrm = det * conj(det) is the square of a real value, so the root is
  // exact in the base field.
  auto root = F.sqrt_exact(cf.real_part(nrm));
  if (!root) {
    throw NotPerfectSquareError("|det| is not exact in the base field");
  }
  return *root;
}

FVal delta(const RMatrix& D) {
  const BaseField& F = D.ring()->base();
  FVal sq = delta_sq(D);
  auto root = F.sqrt_exact(sq);
  if (!root) {
    throw NotPerfectSquareError(
        "pseudo-determinant is irrational; use delta_sq");
  }
  return *root;
}

CauchyBinetReport cauchy_binet_check(const RMatrix& A) {
  require_quaternion_matrix(A);
  const size_t r = A.nrows(), s = A.ncols();
  if (s < r) throw DomainError("needs at least as many columns as rows");
  const BaseField& F = A.ring()->base();

  CauchyBinetReport rep;
  rep.lhs_sq = delta_sq(A * A.conj_transpose());
  rep.rhs_sum = F.zero();
  rep.terms = 0;

  // delta(M M^dag) = delta(M)^2 = delta_sq(M) for square M, so each term of
  // the right-hand side is exact in the base field.
  std::vector<unsigned> idx(r);
  std::iota(idx.begin(), idx.end(), 0u);
  const auto& cols = A.col_labels();
  bool more = r > 0 || true;
  if (r == 0) {
    rep.rhs_sum = F.one();
    rep.terms = 1;
  } else {
    while (more) {
      std::vector<std::string> sel;
      sel.reserve(r);
      for (unsigned i : idx) sel.push_back(cols[i]);
      rep.rhs_sum = F.add(rep.rhs_sum, delta_sq(A.select_cols(sel)));
      ++rep.terms;
      int pos = static_cast<int>(r) - 1;
      while (pos >= 0 && idx[pos] == s - r + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  rep.equal = F.eq(F.mul(rep.rhs_sum, rep.rhs_sum), rep.lhs_sq);
  return rep;
}

mpz_class count_bases(const ChainGroupRep& rep, bool verify) {
  require_quaternion_matrix(rep.mat);
  if (verify) {
    VerifyResult v = verify_rep(rep);
    if (!v.ok) {
      throw DomainError(
          "matrix is not unit-norm pivot-closed; count is undefined");
    }
  }
  FVal value;
  try {
    value = delta(rep.mat * rep.mat.conj_transpose());
  } catch (const NotPerfectSquareError&) {
    throw NotPerfectSquareError(
        "basis count is not an exact integer; the input violates "
        "unimodularity");
  }
  if (value.c[1] != 0 || value.c[0].get_den() != 1) {
    throw DomainError(
        "basis count came out non-integer; the input violates unimodularity");
  }
  return value.c[0].get_num();
}

ProjectionData projection(const ChainGroupRep& rep) {
  require_quaternion_matrix(rep.mat);
  const RMatrix& A = rep.mat;
  RMatrix gram = A * A.conj_transpose();
  auto inv = gram.try_invert();
  if (!inv) {
    throw NotInvertibleError("generator matrix is row-rank deficient");
  }
  return ProjectionData{A.conj_transpose() * *inv * A};
}

FVal marginal(const ChainGroupRep& rep,
              const std::vector<std::string>& subset) {
  ProjectionData proj = projection(rep);
  RMatrix sub = proj.P.submatrix(subset, subset);
  const BaseField& F = rep.mat.ring()->base();
  FVal sq = delta_sq(sub);
  auto root = F.sqrt_exact(sq);
  if (!root) {
    throw NotPerfectSquareError(
        "marginal is not exact; the input violates unimodularity");
  }
  return *root;
}

ChainGroupRep graph_to_qu(const GraphDoc& g) {
  if (g.vertices == 0) throw DomainError("graph has no vertices");
  for (auto [u, v] : g.edges) {
    if (u < 1 || u > g.vertices || v < 1 || v > g.vertices) {
      throw DomainError("edge endpoint out of range");
    }
  }
  // Union-find for components; one vertex row per component is dropped.
  std::vector<unsigned> parent(g.vertices + 1);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<unsigned(unsigned)> find = [&](unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto [u, v] : g.edges) parent[find(u)] = find(v);

  std::vector<bool> drop(g.vertices + 1, false);
  std::vector<bool> seen_root(g.vertices + 1, false);
  for (unsigned v = 1; v <= g.vertices; ++v) {
    unsigned root = find(v);
    if (!seen_root[root]) {
      seen_root[root] = true;
      drop[v] = true;  // first vertex of each component
    }
  }

  auto ring = Ring::quaternion(BaseField::rationals());
  std::vector<std::string> rows, cols;
  std::vector<unsigned> row_vertex;
  for (unsigned v = 1; v <= g.vertices; ++v) {
    if (!drop[v]) {
      rows.push_back("v" + std::to_string(v));
      row_vertex.push_back(v);
    }
  }
  for (size_t k = 0; k < g.edges.size(); ++k) {
    cols.push_back("e" + std::to_string(k + 1));
  }
  RMatrix inc = RMatrix::build(
      ring, rows, cols, [&](size_t i, size_t j) -> RElem {
        auto [u, v] = g.edges[j];
        if (u == v) return ring->zero();
        if (row_vertex[i] == u) return ring->one();
        if (row_vertex[i] == v) return -ring->one();
        return ring->zero();
      });
  return make_weak_rep(
      PartialField::quaternionic_unimodular(BaseField::rationals()),
      std::move(inc));
}

}  // namespace pfm
