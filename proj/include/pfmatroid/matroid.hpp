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

#ifndef PFMATROID_MATROID_HPP
#define PFMATROID_MATROID_HPP

#include <array>
#include <memory>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pfm {

/// A matroid given by its ground set (ordered labels, at most 64 elements)
/// and the family of bases as subset bitmasks. Rank, circuits, cocircuits,
/// duality and minors are derived combinatorially from the basis list.
/// Construction validates the basis-exchange axiom at desk scale (up to 16
/// elements); larger instances skip the check.
class Matroid {
 public:
  static Matroid from_bases(std::vector<std::string> ground,
                            std::vector<uint64_t> bases);
  static Matroid from_basis_lists(
      std::vector<std::string> ground,
      const std::vector<std::vector<std::string>>& bases);
  static Matroid uniform(unsigned r, std::vector<std::string> ground);

  const std::vector<std::string>& ground() const { return ground_; }
  size_t size() const { return ground_.size(); }
  unsigned rank_value() const { return rank_; }
  const std::vector<uint64_t>& bases() const { return bases_; }
  size_t num_bases() const { return bases_.size(); }
  bool exchange_checked() const { return exchange_checked_; }

  size_t index_of(const std::string& label) const;
  uint64_t mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(uint64_t mask) const;

  bool is_basis(uint64_t mask) const;
  unsigned rank(uint64_t subset) const;
  unsigned rank(const std::vector<std::string>& labels) const {
    return rank(mask_of(labels));
  }

  /// Minimal dependent sets, as masks. Computed on first use and cached.
  const std::vector<uint64_t>& circuits() const;
  /// Circuits of the dual; equivalently the supports of elementary chains in
  /// any representation.
  const std::vector<uint64_t>& cocircuits() const;

  uint64_t loops() const;
  uint64_t coloops() const;
  uint64_t full_mask() const;

  Matroid dual() const;
  Matroid deletion(const std::string& e) const;
  Matroid contraction(const std::string& e) const;
  Matroid minor(const std::vector<std::string>& del,
                const std::vector<std::string>& con) const;
  Matroid direct_sum(const Matroid& other) const;
  /// Same matroid with the ground set renamed positionally.
  Matroid relabel(std::vector<std::string> new_ground) const;

  /// All unordered triples of distinct cocircuits X1,X2,X3 such that
  /// contracting E minus their union leaves a rank-2 matroid.
  std::vector<std::array<uint64_t, 3>> modular_triples() const;

  /// Backtracking isomorphism search refined by circuit invariants; returns a
  /// witness bijection (this -> other) or nullopt.
  std::optional<std::unordered_map<std::string, std::string>> is_isomorphic(
      const Matroid& other) const;

  /// Equality as labeled matroids: same ground-set labels (any order) and the
  /// same basis family under the label correspondence.
  bool operator==(const Matroid& o) const;

 private:
  Matroid() = default;
  void compute_circuits_into(std::vector<uint64_t>& out) const;

  std::vector<std::string> ground_;
  unsigned rank_ = 0;
  std::vector<uint64_t> bases_;  // sorted
  std::unordered_set<uint64_t> basis_set_;
  bool exchange_checked_ = false;

  struct Caches;
  std::shared_ptr<Caches> caches_;
};

}  // namespace pfm

#endif  // PFMATROID_MATROID_HPP
