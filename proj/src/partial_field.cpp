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

#include "pfmatroid/partial_field.hpp"

#include <mutex>

namespace pfm {

struct PartialField::ClosureCache {
  std::mutex mu;
  bool built = false;
  std::vector<RElem> elements;
};

PartialField::PartialField(RingPtr ring, GroupDesc group)
    : ring_(std::move(ring)),
      group_(std::move(group)),
      cache_(std::make_shared<ClosureCache>()) {
  if (std::holds_alternative<GroupNormOne>(group_) &&
      ring_->kind() != RingKind::kQuaternion &&
      ring_->kind() != RingKind::kGF3Quaternion) {
    throw DomainError("norm-one group requires a quaternion-kind ring");
  }
  if (std::holds_alternative<GroupPowTwoSigns>(group_) &&
      ring_->kind() != RingKind::kDyadic && ring_->kind() != RingKind::kField) {
    throw DomainError("power-of-two group requires a rational carrier");
  }
}

PartialField PartialField::regular() {
  return PartialField(Ring::rationals(), GroupSigns{});
}

PartialField PartialField::dyadic() {
  return PartialField(Ring::dyadic(), GroupPowTwoSigns{});
}

PartialField PartialField::of_field(const BaseField& f) {
  return PartialField(Ring::field(f), GroupAllUnits{});
}

PartialField PartialField::all_units(RingPtr ring) {
  return PartialField(std::move(ring), GroupAllUnits{});
}

PartialField PartialField::quaternionic_unimodular(const BaseField& f) {
  return PartialField(Ring::quaternion(f), GroupNormOne{});
}

PartialField PartialField::matrix_partial_field(unsigned n, const BaseField& f) {
  return PartialField(Ring::matrix_ring(n, f), GroupAllUnits{});
}

PartialField PartialField::gf3_quaternion_pf() {
  return PartialField(Ring::gf3_quaternion(), GroupAllUnits{});
}

PartialField PartialField::generated_by(RingPtr ring, std::vector<RElem> gens) {
  return PartialField(std::move(ring), GroupGeneratedBy{std::move(gens)});
}

const std::vector<RElem>& PartialField::closure() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->built) {
    constexpr size_t kCap = 4096;
    const auto& gens = std::get<GroupGeneratedBy>(group_).generators;
    std::vector<RElem> elems;
    elems.push_back(ring_->one());
    elems.push_back(-ring_->one());
    auto push_unique = [&](const RElem& x) {
      for (const auto& y : elems) {
        if (y == x) return false;
      }
      elems.push_back(x);
      return true;
    };
    std::vector<RElem> seeds;
    for (const auto& g : gens) {
      seeds.push_back(g);
      seeds.push_back(inverse_of(g));
    }
    for (const auto& s : seeds) push_unique(s);
    bool grew = true;
    while (grew) {
      grew = false;
      const size_t n = elems.size();
      for (size_t i = 0; i < n; ++i) {
        for (const auto& s : seeds) {
          if (push_unique(elems[i] * s)) grew = true;
          if (elems.size() > kCap) {
            throw DomainError(
                "generated group closure exceeded the enumeration cap");
          }
        }
      }
    }
    cache_->elements = std::move(elems);
    cache_->built = true;
  }
  return cache_->elements;
}

bool PartialField::in_group(const RElem& x) const {
  if (!x.ring() || !x.ring()->same_carrier(*ring_)) {
    throw RingMismatchError("element belongs to a different ring");
  }
  if (x.is_zero()) return false;
  return std::visit(
      [&](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, GroupAllUnits>) {
          return is_unit(x);
        } else if constexpr (std::is_same_v<T, GroupSigns>) {
          return x == ring_->one() || x == -ring_->one();
        } else if constexpr (std::is_same_v<T, GroupPowTwoSigns>) {
          mpq_class v = abs(x.coord(0).c[0]);
          if (v == 0) return false;
          mpz_class num = v.get_num();
          mpz_class den = v.get_den();
          return mpz_popcount(num.get_mpz_t()) == 1 &&
                 mpz_popcount(den.get_mpz_t()) == 1;
        } else if constexpr (std::is_same_v<T, GroupNormOne>) {
          return ring_->base().eq(x.norm_sq(), ring_->base().one());
        } else {
          for (const auto& y : closure()) {
            if (y == x) return true;
          }
          return false;
        }
      },
      group_);
}

bool PartialField::is_fundamental(const RElem& p) const {
  if (!contains(p)) throw DomainError("element is not in the partial field");
  return contains(ring_->one() - p);
}

PartialField PartialField::opposite() const {
  GroupDesc g = group_;
  RingPtr opp = ring_->opposite();
  if (auto* gen = std::get_if<GroupGeneratedBy>(&g)) {
    for (auto& x : gen->generators) x = x.transfer_to(opp);
  }
  return PartialField(opp, std::move(g));
}

bool PartialField::operator==(const PartialField& o) const {
  if (!(*ring_ == *o.ring_)) return false;
  if (group_.index() != o.group_.index()) return false;
  if (auto* gen = std::get_if<GroupGeneratedBy>(&group_)) {
    return gen->generators ==
           std::get<GroupGeneratedBy>(o.group_).generators;
  }
  return true;
}

}  // namespace pfm
