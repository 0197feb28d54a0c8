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

#ifndef PFMATROID_PARTIAL_FIELD_HPP
#define PFMATROID_PARTIAL_FIELD_HPP

#include <memory>
#include <variant>
#include <vector>

#include "pfmatroid/matrix.hpp"
#include "pfmatroid/ring.hpp"

namespace pfm {

/// Group descriptors for the distinguished unit group G of a skew partial
/// field. Membership is decidable for each kind.
struct GroupAllUnits {};
struct GroupSigns {};          // {-1, +1}
struct GroupPowTwoSigns {};    // {±2^z}, the dyadic group
struct GroupNormOne {};        // unit-norm quaternions
struct GroupGeneratedBy {      // finite closure of explicit generators
  std::vector<RElem> generators;
};

using GroupDesc = std::variant<GroupAllUnits, GroupSigns, GroupPowTwoSigns,
                               GroupNormOne, GroupGeneratedBy>;

/// A skew partial field: a ring together with a subgroup G of its units with
/// -1 in G. The "elements" of the partial field are G together with 0.
class PartialField {
 public:
  PartialField(RingPtr ring, GroupDesc group);

  /// (Z, {-1,1}) with the integers carried inside Q.
  static PartialField regular();
  /// (Z[1/2], <-1, 2>): nonzero elements are exactly the ±2^z.
  static PartialField dyadic();
  /// A (skew) field viewed as a partial field (R, R*).
  static PartialField of_field(const BaseField& f);
  static PartialField all_units(RingPtr ring);
  /// (H over f, unit-norm quaternions).
  static PartialField quaternionic_unimodular(const BaseField& f);
  /// (n-by-n matrices over f, invertible matrices).
  static PartialField matrix_partial_field(unsigned n, const BaseField& f);
  /// The 81-element quaternion algebra over GF(3) with all of its units.
  static PartialField gf3_quaternion_pf();
  static PartialField generated_by(RingPtr ring, std::vector<RElem> gens);

  const RingPtr& ring() const { return ring_; }
  const GroupDesc& group() const { return group_; }

  bool in_group(const RElem& x) const;
  /// x is an element of the partial field: zero or a member of G.
  bool contains(const RElem& x) const { return x.is_zero() || in_group(x); }
  /// p is fundamental when 1 - p is again an element of the partial field.
  bool is_fundamental(const RElem& p) const;

  /// The opposite partial field, over the opposite ring. The group set is
  /// unchanged (a subgroup closed under inverses generates the same set under
  /// reversed multiplication), so the membership test carries over.
  PartialField opposite() const;

  bool operator==(const PartialField& o) const;

 private:
  const std::vector<RElem>& closure() const;

  RingPtr ring_;
  GroupDesc group_;
  // Lazily computed closure for generated-by groups; shared across copies.
  struct ClosureCache;
  std::shared_ptr<ClosureCache> cache_;
};

}  // namespace pfm

#endif  // PFMATROID_PARTIAL_FIELD_HPP
