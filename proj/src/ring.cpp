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

#include "pfmatroid/ring.hpp"

#include <sstream>

namespace pfm {

Ring::Ring(RingKind k, BaseField f, unsigned n, bool opp)
    : kind_(k), base_(std::move(f)), n_(n), opposite_(opp) {
  build_table();
}

std::shared_ptr<const Ring> Ring::field(const BaseField& f) {
  return std::shared_ptr<const Ring>(new Ring(RingKind::kField, f, 0, false));
}

std::shared_ptr<const Ring> Ring::rationals() {
  return field(BaseField::rationals());
}

std::shared_ptr<const Ring> Ring::dyadic() {
  return std::shared_ptr<const Ring>(
      new Ring(RingKind::kDyadic, BaseField::rationals(), 0, false));
}

std::shared_ptr<const Ring> Ring::quaternion(const BaseField& f) {
  if (f.kind() != BaseField::Kind::kChar0 || f.has_imaginary()) {
    throw DomainError("quaternion base field must be a real char-0 field");
  }
  return std::shared_ptr<const Ring>(
      new Ring(RingKind::kQuaternion, f, 0, false));
}

std::shared_ptr<const Ring> Ring::matrix_ring(unsigned n, const BaseField& f) {
  if (n == 0) throw DomainError("matrix ring size must be positive");
  return std::shared_ptr<const Ring>(
      new Ring(RingKind::kMatrixRing, f, n, false));
}

std::shared_ptr<const Ring> Ring::gf3_quaternion() {
  return std::shared_ptr<const Ring>(
      new Ring(RingKind::kGF3Quaternion, BaseField::gf(3), 0, false));
}

std::shared_ptr<const Ring> Ring::opposite() const {
  return std::shared_ptr<const Ring>(new Ring(kind_, base_, n_, !opposite_));
}

unsigned Ring::dim() const {
  switch (kind_) {
    case RingKind::kField:
    case RingKind::kDyadic:
      return 1;
    case RingKind::kQuaternion:
    case RingKind::kGF3Quaternion:
      return 4;
    case RingKind::kMatrixRing:
      return n_ * n_;
  }
  return 0;
}

bool Ring::commutative() const {
  switch (kind_) {
    case RingKind::kField:
    case RingKind::kDyadic:
      return true;
    case RingKind::kMatrixRing:
      return n_ == 1;
    default:
      return false;
  }
}

void Ring::build_table() {
  table_.clear();
  switch (kind_) {
    case RingKind::kField:
    case RingKind::kDyadic:
      table_.push_back({0, 0, 0, false});
      break;
    case RingKind::kQuaternion:
    case RingKind::kGF3Quaternion: {
      // Basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1.
      auto put = [&](int s, int t, int u, bool neg) {
        table_.push_back({static_cast<uint16_t>(s), static_cast<uint16_t>(t),
                          static_cast<uint16_t>(u), neg});
      };
      put(0, 0, 0, false);
      put(0, 1, 1, false);
      put(0, 2, 2, false);
      put(0, 3, 3, false);
      put(1, 0, 1, false);
      put(2, 0, 2, false);
      put(3, 0, 3, false);
      put(1, 1, 0, true);
      put(2, 2, 0, true);
      put(3, 3, 0, true);
      put(1, 2, 3, false);  // ij = k
      put(2, 1, 3, true);   // ji = -k
      put(2, 3, 1, false);  // jk = i
      put(3, 2, 1, true);   // kj = -i
      put(3, 1, 2, false);  // ki = j
      put(1, 3, 2, true);   // ik = -j
      break;
    }
    case RingKind::kMatrixRing: {
      // Basis E(r,c) in row-major order; E(a,b) E(b,d) = E(a,d).
      auto idx = [&](unsigned r, unsigned c) {
        return static_cast<uint16_t>(r * n_ + c);
      };
      for (unsigned a = 0; a < n_; ++a) {
        for (unsigned b = 0; b < n_; ++b) {
          for (unsigned d = 0; d < n_; ++d) {
            table_.push_back({idx(a, b), idx(b, d), idx(a, d), false});
          }
        }
      }
      break;
    }
  }
}

RElem Ring::zero() const {
  return RElem(self(), std::vector<FVal>(dim(), base_.zero()));
}

RElem Ring::one() const {
  std::vector<FVal> c(dim(), base_.zero());
  switch (kind_) {
    case RingKind::kField:
    case RingKind::kDyadic:
    case RingKind::kQuaternion:
    case RingKind::kGF3Quaternion:
      c[0] = base_.one();
      break;
    case RingKind::kMatrixRing:
      for (unsigned d = 0; d < n_; ++d) c[d * n_ + d] = base_.one();
      break;
  }
  return RElem(self(), std::move(c));
}

RElem Ring::from_long(long v) const { return from_scalar(base_.from_long(v)); }

RElem Ring::from_scalar(const FVal& v) const {
  RElem o = one();
  std::vector<FVal> c = o.coords();
  for (auto& x : c) {
    if (!base_.is_zero(x)) x = base_.mul(x, v);
  }
  return RElem(self(), std::move(c));
}

RElem Ring::from_coords(std::vector<FVal> coords) const {
  return RElem(self(), std::move(coords));
}

RElem Ring::quaternion_elem(const FVal& a, const FVal& b, const FVal& c,
                            const FVal& d) const {
  if (kind_ != RingKind::kQuaternion && kind_ != RingKind::kGF3Quaternion) {
    throw DomainError("quaternion_elem requires a quaternion-kind ring");
  }
  return RElem(self(), {a, b, c, d});
}

std::shared_ptr<const Ring> Ring::self() const {
  // All rings are created through the shared_ptr factories.
  return shared_from_this();
}

std::string Ring::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case RingKind::kField:
      os << "field";
      break;
    case RingKind::kDyadic:
      os << "dyadic";
      break;
    case RingKind::kQuaternion:
      os << "quaternion";
      break;
    case RingKind::kMatrixRing:
      os << "matrix(" << n_ << ")";
      break;
    case RingKind::kGF3Quaternion:
      os << "gf3-quaternion";
      break;
  }
  if (base_.kind() == BaseField::Kind::kGFp) {
    os << " over GF(" << base_.modulus() << ")";
  } else {
    os << " over Q";
    if (base_.sqrt_param()) os << "(sqrt " << base_.sqrt_param() << ")";
    if (base_.has_imaginary()) os << "(i)";
  }
  if (opposite_) os << " [opposite]";
  return os.str();
}

RElem::RElem(RingPtr ring, std::vector<FVal> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_->dim()) {
    throw DomainError("coordinate vector does not match ring dimension");
  }
  if (ring_->kind() == RingKind::kDyadic) {
    if (!BaseField::denominator_power_of_two(coords_[0].c[0])) {
      throw DomainError("value outside the power-of-two-denominator subring");
    }
  }
}

void RElem::require_same_ring(const RElem& o) const {
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_)) {
    throw RingMismatchError("ring mismatch in element operation");
  }
}

bool RElem::is_zero() const {
  for (const auto& x : coords_) {
    if (!ring_->base().is_zero(x)) return false;
  }
  return true;
}

bool RElem::operator==(const RElem& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_carrier(*o.ring_)) return false;
  return coords_ == o.coords_;
}

RElem RElem::operator+(const RElem& o) const {
  require_same_ring(o);
  std::vector<FVal> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = ring_->base().add(coords_[i], o.coords_[i]);
  }
  return RElem(ring_, std::move(c));
}

RElem RElem::operator-(const RElem& o) const {
  require_same_ring(o);
  std::vector<FVal> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = ring_->base().sub(coords_[i], o.coords_[i]);
  }
  return RElem(ring_, std::move(c));
}

RElem RElem::operator-() const {
  std::vector<FVal> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = ring_->base().neg(coords_[i]);
  return RElem(ring_, std::move(c));
}

RElem RElem::operator*(const RElem& o) const {
  require_same_ring(o);
  const BaseField& F = ring_->base();
  const RElem& a = ring_->is_opposite() ? o : *this;
  const RElem& b = ring_->is_opposite() ? *this : o;
  std::vector<FVal> c(coords_.size(), F.zero());
  for (const auto& t : ring_->mul_table()) {
    const FVal& xa = a.coords_[t.lhs];
    const FVal& xb = b.coords_[t.rhs];
    if (F.is_zero(xa) || F.is_zero(xb)) continue;
    FVal prod = F.mul(xa, xb);
    if (t.negate) prod = F.neg(prod);
    c[t.out] = F.add(c[t.out], prod);
  }
  return RElem(ring_, std::move(c));
}

RElem RElem::conj() const {
  const BaseField& F = ring_->base();
  switch (ring_->kind()) {
    case RingKind::kQuaternion:
    case RingKind::kGF3Quaternion: {
      std::vector<FVal> c = coords_;
      for (int i = 1; i < 4; ++i) c[i] = F.neg(c[i]);
      return RElem(ring_, std::move(c));
    }
    case RingKind::kField: {
      std::vector<FVal> c = coords_;
      c[0] = F.conj_im(c[0]);
      return RElem(ring_, std::move(c));
    }
    case RingKind::kDyadic:
      return *this;
    case RingKind::kMatrixRing: {
      unsigned n = ring_->matrix_size();
      std::vector<FVal> c(coords_.size());
      for (unsigned r = 0; r < n; ++r) {
        for (unsigned col = 0; col < n; ++col) {
          c[col * n + r] = F.conj_im(coords_[r * n + col]);
        }
      }
      return RElem(ring_, std::move(c));
    }
  }
  throw DomainError("unsupported ring kind");
}

FVal RElem::norm_sq() const {
  if (ring_->kind() != RingKind::kQuaternion &&
      ring_->kind() != RingKind::kGF3Quaternion) {
    throw DomainError("norm_sq requires a quaternion-kind ring");
  }
  const BaseField& F = ring_->base();
  FVal s = F.zero();
  for (const auto& x : coords_) s = F.add(s, F.mul(x, x));
  return s;
}

RElem RElem::transfer_to(const RingPtr& target) const {
  if (!ring_->same_carrier(*target)) {
    throw RingMismatchError("transfer requires rings with the same carrier");
  }
  return RElem(target, coords_);
}

std::string RElem::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << ring_->base().to_string(coords_[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace pfm
