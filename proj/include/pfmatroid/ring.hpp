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

#ifndef PFMATROID_RING_HPP
#define PFMATROID_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pfmatroid/field.hpp"

namespace pfm {

class RElem;

enum class RingKind {
  kField,          // the base field itself
  kDyadic,         // the subring of Q with power-of-two denominators
  kQuaternion,     // quaternions over a char-0 base field
  kMatrixRing,     // n-by-n matrices over the base field
  kGF3Quaternion,  // the 81-element quaternion algebra over GF(3)
};

/// A ring with two-sided identity, stored as a finite-dimensional algebra
/// over an explicit base field. Multiplication of the distinguished basis is
/// tabulated once (the structure constants), which makes every derived
/// computation (products, conjugation, the regular representation used for
/// invertibility) uniform across ring kinds. Rings are immutable and shared.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static std::shared_ptr<const Ring> field(const BaseField& f);
  static std::shared_ptr<const Ring> rationals();
  static std::shared_ptr<const Ring> dyadic();
  static std::shared_ptr<const Ring> quaternion(const BaseField& f);
  static std::shared_ptr<const Ring> matrix_ring(unsigned n, const BaseField& f);
  static std::shared_ptr<const Ring> gf3_quaternion();

  /// The opposite ring: same carrier, multiplication reversed.
  std::shared_ptr<const Ring> opposite() const;

  RingKind kind() const { return kind_; }
  const BaseField& base() const { return base_; }
  unsigned matrix_size() const { return n_; }
  bool is_opposite() const { return opposite_; }
  /// Dimension of the carrier as a module over the base field.
  unsigned dim() const;
  bool commutative() const;

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && base_ == o.base_ && n_ == o.n_ &&
           opposite_ == o.opposite_;
  }
  /// Equal ignoring multiplication order (shared carrier).
  bool same_carrier(const Ring& o) const {
    return kind_ == o.kind_ && base_ == o.base_ && n_ == o.n_;
  }

  /// basis[s] * basis[t] = sum of coef * basis[out] over matching terms.
  struct MulTerm {
    uint16_t lhs, rhs, out;
    bool negate;
  };
  const std::vector<MulTerm>& mul_table() const { return table_; }

  RElem zero() const;
  RElem one() const;
  RElem from_long(long v) const;
  RElem from_scalar(const FVal& v) const;
  RElem from_coords(std::vector<FVal> coords) const;
  /// a + b*i + c*j + d*k for the quaternion kinds.
  RElem quaternion_elem(const FVal& a, const FVal& b, const FVal& c,
                        const FVal& d) const;

  std::string describe() const;

 private:
  Ring(RingKind k, BaseField f, unsigned n, bool opp);
  void build_table();
  std::shared_ptr<const Ring> self() const;

  RingKind kind_;
  BaseField base_;
  unsigned n_ = 0;  // matrix size for kMatrixRing
  bool opposite_ = false;
  std::vector<MulTerm> table_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// An exact element of a Ring: a coordinate vector over the base field in the
/// ring's distinguished basis. Immutable value type.
class RElem {
 public:
  RElem() = default;
  RElem(RingPtr ring, std::vector<FVal> coords);

  const RingPtr& ring() const { return ring_; }
  const std::vector<FVal>& coords() const { return coords_; }
  const FVal& coord(size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool operator==(const RElem& o) const;
  bool operator!=(const RElem& o) const { return !(*this == o); }

  RElem operator+(const RElem& o) const;
  RElem operator-(const RElem& o) const;
  RElem operator-() const;
  RElem operator*(const RElem& o) const;

  /// Quaternion conjugation for the quaternion kinds, complex conjugation on
  /// complexified fields, conjugate transpose of the block for matrix rings.
  RElem conj() const;
  /// |a|^2 = a * conj(a), projected to the scalar coordinate. Quaternion
  /// kinds only.
  FVal norm_sq() const;

  /// The same coordinates read in the given ring (which must share the
  /// carrier; used to move elements to/from the opposite ring).
  RElem transfer_to(const RingPtr& target) const;

  std::string to_string() const;

 private:
  void require_same_ring(const RElem& o) const;

  RingPtr ring_;
  std::vector<FVal> coords_;
};

}  // namespace pfm

#endif  // PFMATROID_RING_HPP
