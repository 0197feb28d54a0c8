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

#ifndef PFMATROID_MULTILINEAR_HPP
#define PFMATROID_MULTILINEAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfmatroid/chain_group.hpp"
#include "pfmatroid/matrix.hpp"
#include "pfmatroid/matroid.hpp"

namespace pfm {

/// Assigns to every ground element an n-dimensional subspace of F^(n*r),
/// stored as an (n*r) x n spanning matrix over the field. A valid assignment
/// has joint dimensions equal to n times the matroid rank on every subset.
struct MultilinearRep {
  unsigned n = 1;
  BaseField field = BaseField::rationals();
  std::vector<std::string> ground;
  std::map<std::string, RMatrix> blocks;

  unsigned ambient() const;
};

struct MultilinearVerdict {
  bool ok = false;
  // First subset (as labels) whose joint dimension is off, with both values.
  std::optional<std::vector<std::string>> failing_subset;
  unsigned expected = 0, actual = 0;
};

/// Checks dim(sum of V(e), e in X) == n * rank(X) for every subset X of the
/// ground set. Exponential in |E|; intended for desk-scale instances.
MultilinearVerdict check_multilinear(const MultilinearRep& rep,
                                     const Matroid& m);

/// Reads the blocks of the unwrapped matrix as subspace assignments.
MultilinearRep from_matrix(const RMatrix& A);

/// Assembles the blocks, wraps to a matrix over matrix_ring(n, F), and
/// verifies it is a weak matrix for (M(n,F), GL(n,F)) by pivoting onto a
/// basis and walking the pivot closure. Throws on verification failure.
RMatrix to_matrix(const MultilinearRep& rep);

}  // namespace pfm

#endif  // PFMATROID_MULTILINEAR_HPP
