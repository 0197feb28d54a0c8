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

#ifndef PFMATROID_SRC_GAUSS_HPP
#define PFMATROID_SRC_GAUSS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pfmatroid/field.hpp"

namespace pfm::detail {

// Dense matrix over a base field, used for the elimination workhorses.
struct FieldMat {
  BaseField f = BaseField::rationals();
  size_t nr = 0, nc = 0;
  std::vector<FVal> a;

  FieldMat() = default;
  FieldMat(const BaseField& field, size_t rows, size_t cols)
      : f(field), nr(rows), nc(cols), a(rows * cols, field.zero()) {}

  FVal& at(size_t i, size_t j) { return a[i * nc + j]; }
  const FVal& at(size_t i, size_t j) const { return a[i * nc + j]; }
};

// Forward elimination; destroys the matrix, returns the rank.
size_t gauss_rank(FieldMat& m);

// Exact determinant of a square matrix (destructive). Empty matrix -> 1.
FVal gauss_det(FieldMat m);

// Gauss-Jordan inverse of a square matrix; nullopt when singular.
std::optional<FieldMat> gauss_inverse(FieldMat m);

// Byte matrix mod a small prime, for the GF(p) fast paths.
struct GfpGrid {
  uint32_t p = 3;
  size_t nr = 0, nc = 0;
  std::vector<uint8_t> a;

  GfpGrid() = default;
  GfpGrid(uint32_t prime, size_t rows, size_t cols)
      : p(prime), nr(rows), nc(cols), a(rows * cols, 0) {}

  uint8_t& at(size_t i, size_t j) { return a[i * nc + j]; }
  uint8_t at(size_t i, size_t j) const { return a[i * nc + j]; }
};

size_t gfp_rank(GfpGrid& m);
uint8_t gfp_inv(uint32_t p, uint8_t v);  // 0 stays 0 is never requested

// Invertibility tests for square matrices that bail out at the first
// pivotless column.
bool gauss_full_rank(FieldMat& m);
bool gfp_full_rank(GfpGrid& m);

// GF(3) full-rank test on bit-sliced rows (digit d at column j encoded as
// bit j of lo for d = 1 and of hi for d = 2), up to 32 columns.
bool gf3_full_rank_bits(uint32_t* lo, uint32_t* hi, unsigned n);

}  // namespace pfm::detail

#endif  // PFMATROID_SRC_GAUSS_HPP
