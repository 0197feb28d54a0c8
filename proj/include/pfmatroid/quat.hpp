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

#ifndef PFMATROID_QUAT_HPP
#define PFMATROID_QUAT_HPP

#include <gmpxx.h>

#include <functional>
#include <utility>
#include <vector>

#include "pfmatroid/chain_group.hpp"
#include "pfmatroid/matrix.hpp"

namespace pfm {

/// The standard embedding of a quaternion a+bi+cj+dk as the 2x2 complex
/// matrix [[a+bi, c+di], [-c+di, a-bi]]; a ring homomorphism with
/// phi(conj(q)) the conjugate transpose of phi(q).
RElem phi_elem(const RElem& q);
/// Entry-wise phi: a quaternion matrix becomes a matrix over the 2x2 matrix
/// ring of the complexified base field.
RMatrix phi_matrix(const RMatrix& A);
std::function<RElem(const RElem&)> phi_hom();
PartialField phi_target(const BaseField& quaternion_base);

/// The squared pseudo-determinant |det(z_2(phi(D)))| of a square quaternion
/// matrix, exact in the (real) base field. Always well defined: the complex
/// determinant of an embedded quaternion matrix is real.
FVal delta_sq(const RMatrix& D);
/// The pseudo-determinant itself; throws NotPerfectSquareError when the
/// radicand is not a perfect square in the base field (work with delta_sq
/// in that case).
FVal delta(const RMatrix& D);

struct CauchyBinetReport {
  bool equal = false;
  FVal lhs_sq;   // delta_sq(A A^dag), the square of the left-hand side
  FVal rhs_sum;  // sum over column subsets of delta_sq(A[X,B])
  size_t terms = 0;
};

/// Checks delta(A A^dag) = sum over r-subsets B of delta(A[X,B] A[X,B]^dag)
/// exactly, compared as squares: each right-hand term equals
/// delta_sq(A[X,B]), so the identity holds iff rhs_sum^2 = lhs_sq.
CauchyBinetReport cauchy_binet_check(const RMatrix& A);

/// Number of bases of the represented matroid, as delta(A A^dag). The input
/// must be a verified unit-norm-closed quaternion matrix (checked unless
/// verify is false). A non-integer or non-square result means the input was
/// not such a matrix.
mpz_class count_bases(const ChainGroupRep& rep, bool verify = true);

/// P = A^dag (A A^dag)^{-1} A for a full-row-rank quaternion matrix:
/// Hermitian, idempotent, invariant under left multiplication of A by any
/// invertible matrix.
struct ProjectionData {
  RMatrix P;
};
ProjectionData projection(const ChainGroupRep& rep);

/// delta of the principal F x F submatrix of the projection matrix: the
/// fraction of bases containing F.
FVal marginal(const ChainGroupRep& rep, const std::vector<std::string>& subset);

struct GraphDoc {
  unsigned vertices = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;  // 1-based endpoints
};

/// Signed incidence matrix of the graph over the rational quaternions, one
/// row removed per connected component: a unimodular representation of the
/// cycle matroid, suitable for spanning-tree counting and marginals.
ChainGroupRep graph_to_qu(const GraphDoc& g);

}  // namespace pfm

#endif  // PFMATROID_QUAT_HPP
