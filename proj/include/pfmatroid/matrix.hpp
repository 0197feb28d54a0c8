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

#ifndef PFMATROID_MATRIX_HPP
#define PFMATROID_MATRIX_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfmatroid/ring.hpp"

namespace pfm {

/// A dense matrix over a Ring with ordered, duplicate-free row and column
/// labels. Matrices are immutable value types; every operation returns a new
/// matrix. Ground sets in this domain stay small, so no sparse storage.
class RMatrix {
 public:
  RMatrix() = default;
  static RMatrix zero(RingPtr ring, std::vector<std::string> rows,
                      std::vector<std::string> cols);
  static RMatrix identity(RingPtr ring, std::vector<std::string> labels);
  static RMatrix from_rows(RingPtr ring, std::vector<std::string> rows,
                           std::vector<std::string> cols,
                           const std::vector<std::vector<RElem>>& entries);
  static RMatrix build(RingPtr ring, std::vector<std::string> rows,
                       std::vector<std::string> cols,
                       const std::function<RElem(size_t, size_t)>& fn);

  const RingPtr& ring() const { return ring_; }
  size_t nrows() const { return rows_.size(); }
  size_t ncols() const { return cols_.size(); }
  const std::vector<std::string>& row_labels() const { return rows_; }
  const std::vector<std::string>& col_labels() const { return cols_; }
  size_t row_index(const std::string& label) const;
  size_t col_index(const std::string& label) const;
  bool has_row(const std::string& label) const;
  bool has_col(const std::string& label) const;

  const RElem& at(size_t i, size_t j) const { return e_[i * cols_.size() + j]; }
  const RElem& at(const std::string& x, const std::string& y) const {
    return at(row_index(x), col_index(y));
  }

  RMatrix submatrix(const std::vector<std::string>& rows,
                    const std::vector<std::string>& cols) const;
  RMatrix select_cols(const std::vector<std::string>& cols) const;

  RMatrix operator*(const RMatrix& o) const;
  RMatrix operator+(const RMatrix& o) const;
  RMatrix operator-() const;
  bool operator==(const RMatrix& o) const;

  RMatrix transpose() const;
  RMatrix conj_transpose() const;
  RMatrix map_entries(const std::function<RElem(const RElem&)>& fn) const;
  /// Column y right-multiplied by g (chains are row vectors, so scaling a
  /// coordinate acts on the right).
  RMatrix right_scale_column(const std::string& y, const RElem& g) const;
  /// Row x left-multiplied by g.
  RMatrix left_scale_row(const std::string& x, const RElem& g) const;
  /// Same entries read in the given ring (shared carrier).
  RMatrix transfer_to(const RingPtr& target) const;

  /// The exchange of row x and column y defined by the four-case formula
  ///   (A^{xy})[y,x] = a^{-1}
  ///   (A^{xy})[y,v] = a^{-1} A[x,v]            (v != x)
  ///   (A^{xy})[u,x] = -A[u,y] a^{-1}           (u != y)
  ///   (A^{xy})[u,v] = A[u,v] - A[u,y] a^{-1} A[x,v]
  /// where a = A[x,y] must be a unit. Multiplication order is the ring's own,
  /// so the same code serves the opposite ring.
  RMatrix pivot(const std::string& x, const std::string& y) const;

  /// Entry-wise regular representation over the base field: each entry a is
  /// replaced by the dim x dim matrix of left multiplication by a. A square
  /// matrix is invertible over the ring iff this expansion is invertible over
  /// the base field.
  RMatrix regular_representation() const;

  std::optional<RMatrix> try_invert() const;
  RMatrix invert() const;  // throws NotInvertibleError
  bool is_invertible() const;

  /// Block decomposition between a matrix over matrix_ring(n, F) and the
  /// n-times-larger matrix over F: block (a,b) of the unwrapped matrix equals
  /// the n x n entry at (a,b).
  RMatrix unwrap() const;
  static RMatrix wrap(unsigned n, const RMatrix& field_matrix);

  /// Exact determinant; commutative coefficient rings only.
  FVal det() const;
  /// Rank by exact elimination; field-kind (or dyadic) coefficient rings.
  size_t rank() const;

  std::string to_string() const;

 private:
  RMatrix(RingPtr ring, std::vector<std::string> rows,
          std::vector<std::string> cols, std::vector<RElem> entries);
  static void check_labels(const std::vector<std::string>& labels);

  RingPtr ring_;
  std::vector<std::string> rows_, cols_;
  std::vector<RElem> e_;  // row-major
};

/// Inverse of a ring element (two-sided). Closed forms per ring kind, with
/// the 1x1 regular-representation inverse as the generic fallback.
std::optional<RElem> try_inverse(const RElem& a);
/// The fallback route on its own: invertibility of the 1x1 matrix through
/// the regular representation. Agrees with try_inverse everywhere.
std::optional<RElem> try_inverse_regular(const RElem& a);
RElem inverse_of(const RElem& a);  // throws NotInvertibleError
bool is_unit(const RElem& a);

}  // namespace pfm

#endif  // PFMATROID_MATRIX_HPP
